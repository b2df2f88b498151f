//! PQ-tree over leaves `0..n` for the consecutive-ones problem.
//!
//! P-nodes permit any order of their children, Q-nodes only the given order
//! or its reverse. [`PqTree::reduce`] restricts the represented permutations
//! to those in which a leaf subset is consecutive, using the standard
//! leaf-to-root template matching. Each reduction walks the whole tree, so a
//! batch of `m` constraints costs `O(m · n · depth)`; that is plenty for
//! clique orderings of graphs with a few hundred vertices.

use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Leaf(usize),
    P(Vec<Node>),
    Q(Vec<Node>),
}

/// The constraint set has no common consecutive arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no arrangement satisfies every consecutiveness constraint")]
pub struct Infeasible;

/// Outcome of reducing a subtree below the pertinent root.
enum Reduced {
    Empty(Node),
    Full(Node),
    /// Replacement children for a parent Q-node, empty side first.
    Partial(Vec<Node>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqTree {
    root: Option<Node>,
    leaves: usize,
}

impl PqTree {
    /// Universal tree: every permutation of `0..leaves` allowed.
    pub fn new(leaves: usize) -> Self {
        let root = match leaves {
            0 => None,
            1 => Some(Node::Leaf(0)),
            _ => Some(Node::P((0..leaves).map(Node::Leaf).collect())),
        };
        PqTree { root, leaves }
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    /// Requires the leaves in `set` to be consecutive. On failure the tree is
    /// left unchanged.
    pub fn reduce(&mut self, set: &[usize]) -> Result<(), Infeasible> {
        let mut mark = alloc::vec![false; self.leaves];
        let mut total = 0;
        for &x in set {
            assert!(x < self.leaves, "leaf {x} out of range");
            if !mark[x] {
                mark[x] = true;
                total += 1;
            }
        }
        if total <= 1 || total == self.leaves {
            return Ok(());
        }
        let root = self.root.take().expect("non-empty tree");
        match reduce_below(root.clone(), &mark, total) {
            Ok(node) => {
                self.root = Some(normalize(node));
                Ok(())
            }
            Err(e) => {
                self.root = Some(root);
                Err(e)
            }
        }
    }

    /// Leaves read left to right: one permutation the tree allows.
    pub fn frontier(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaves);
        if let Some(root) = &self.root {
            collect_leaves(root, &mut out);
        }
        out
    }

    /// Number of permutations the tree represents.
    pub fn permutation_count(&self) -> u128 {
        fn go(node: &Node) -> u128 {
            match node {
                Node::Leaf(_) => 1,
                Node::P(ch) => ch.iter().map(go).product::<u128>() * (1..=ch.len() as u128).product::<u128>(),
                Node::Q(ch) => ch.iter().map(go).product::<u128>() * 2,
            }
        }
        self.root.as_ref().map_or(1, go)
    }
}

fn collect_leaves(node: &Node, out: &mut Vec<usize>) {
    match node {
        Node::Leaf(x) => out.push(*x),
        Node::P(ch) | Node::Q(ch) => ch.iter().for_each(|c| collect_leaves(c, out)),
    }
}

fn marked_count(node: &Node, mark: &[bool]) -> usize {
    match node {
        Node::Leaf(x) => usize::from(mark[*x]),
        Node::P(ch) | Node::Q(ch) => ch.iter().map(|c| marked_count(c, mark)).sum(),
    }
}

fn leaf_count(node: &Node) -> usize {
    match node {
        Node::Leaf(_) => 1,
        Node::P(ch) | Node::Q(ch) => ch.iter().map(leaf_count).sum(),
    }
}

fn wrap_p(mut nodes: Vec<Node>) -> Node {
    if nodes.len() == 1 {
        nodes.pop().unwrap()
    } else {
        Node::P(nodes)
    }
}

/// Descends to the deepest node holding every marked leaf and reduces there.
fn reduce_below(node: Node, mark: &[bool], total: usize) -> Result<Node, Infeasible> {
    let (is_q, mut ch) = match node {
        Node::Leaf(_) => return Ok(node),
        Node::P(ch) => (false, ch),
        Node::Q(ch) => (true, ch),
    };
    let rebuild = |ch| if is_q { Node::Q(ch) } else { Node::P(ch) };
    match ch.iter().position(|c| marked_count(c, mark) == total) {
        Some(idx) => {
            let child = core::mem::replace(&mut ch[idx], Node::Leaf(usize::MAX));
            ch[idx] = reduce_below(child, mark, total)?;
            Ok(rebuild(ch))
        }
        None => reduce_root(rebuild(ch), mark),
    }
}

fn reduce_root(node: Node, mark: &[bool]) -> Result<Node, Infeasible> {
    if marked_count(&node, mark) == leaf_count(&node) {
        return Ok(node);
    }
    match node {
        Node::Leaf(_) => Ok(node),
        Node::P(ch) => {
            let (empties, fulls, mut partials) = split_children(ch, mark)?;
            if partials.len() > 2 {
                return Err(Infeasible);
            }
            let mut seq = match partials.len() {
                0 => {
                    let mut out = empties;
                    out.push(wrap_p(fulls));
                    return Ok(wrap_p(out));
                }
                _ => partials.remove(0),
            };
            if !fulls.is_empty() {
                seq.push(wrap_p(fulls));
            }
            if let Some(mut second) = partials.pop() {
                second.reverse();
                seq.extend(second);
            }
            let q = Node::Q(seq);
            if empties.is_empty() {
                Ok(q)
            } else {
                let mut out = empties;
                out.push(q);
                Ok(Node::P(out))
            }
        }
        Node::Q(ch) => {
            let reduced = ch
                .into_iter()
                .map(|c| process(c, mark))
                .collect::<Result<Vec<_>, _>>()?;
            let non_empty: Vec<usize> = reduced
                .iter()
                .enumerate()
                .filter(|(_, r)| !matches!(r, Reduced::Empty(_)))
                .map(|(i, _)| i)
                .collect();
            let (first, last) = (non_empty[0], *non_empty.last().unwrap());
            if non_empty.len() != last - first + 1 {
                return Err(Infeasible);
            }
            let mut out = Vec::new();
            for (i, r) in reduced.into_iter().enumerate() {
                match r {
                    Reduced::Empty(n) | Reduced::Full(n) => out.push(n),
                    Reduced::Partial(seq) if i == first => out.extend(seq),
                    Reduced::Partial(mut seq) if i == last => {
                        seq.reverse();
                        out.extend(seq);
                    }
                    Reduced::Partial(_) => return Err(Infeasible),
                }
            }
            Ok(Node::Q(out))
        }
    }
}

/// Empty children, full children, and partial children as oriented sequences.
type Split = (Vec<Node>, Vec<Node>, Vec<Vec<Node>>);

/// Reduces every child and sorts the results into empty, full and partial.
fn split_children(ch: Vec<Node>, mark: &[bool]) -> Result<Split, Infeasible> {
    let mut empties = Vec::new();
    let mut fulls = Vec::new();
    let mut partials = Vec::new();
    for c in ch {
        match process(c, mark)? {
            Reduced::Empty(n) => empties.push(n),
            Reduced::Full(n) => fulls.push(n),
            Reduced::Partial(seq) => partials.push(seq),
        }
    }
    Ok((empties, fulls, partials))
}

/// Reduces a subtree strictly below the pertinent root, which must end up
/// with its marked leaves at one end.
fn process(node: Node, mark: &[bool]) -> Result<Reduced, Infeasible> {
    let marked = marked_count(&node, mark);
    if marked == 0 {
        return Ok(Reduced::Empty(node));
    }
    if marked == leaf_count(&node) {
        return Ok(Reduced::Full(node));
    }
    match node {
        Node::Leaf(_) => unreachable!("a leaf is either empty or full"),
        Node::P(ch) => {
            let (empties, fulls, mut partials) = split_children(ch, mark)?;
            if partials.len() > 1 {
                return Err(Infeasible);
            }
            let mut seq = Vec::new();
            if !empties.is_empty() {
                seq.push(wrap_p(empties));
            }
            if let Some(p) = partials.pop() {
                seq.extend(p);
            }
            if !fulls.is_empty() {
                seq.push(wrap_p(fulls));
            }
            Ok(Reduced::Partial(seq))
        }
        Node::Q(ch) => {
            let mut reduced = ch
                .into_iter()
                .map(|c| process(c, mark))
                .collect::<Result<Vec<_>, _>>()?;
            if !empty_to_full(&reduced) {
                reduced.reverse();
                if !empty_to_full(&reduced) {
                    return Err(Infeasible);
                }
            }
            let mut seq = Vec::new();
            for r in reduced {
                match r {
                    Reduced::Empty(n) | Reduced::Full(n) => seq.push(n),
                    Reduced::Partial(s) => seq.extend(s),
                }
            }
            Ok(Reduced::Partial(seq))
        }
    }
}

/// Pattern `empty* partial? full*`.
fn empty_to_full(seq: &[Reduced]) -> bool {
    let mut phase = 0;
    for r in seq {
        phase = match (phase, r) {
            (0, Reduced::Empty(_)) => 0,
            (0, Reduced::Partial(_)) => 1,
            (_, Reduced::Full(_)) => 2,
            _ => return false,
        };
    }
    true
}

/// Collapses single-child nodes and turns two-child Q-nodes into P-nodes.
fn normalize(node: Node) -> Node {
    match node {
        Node::Leaf(_) => node,
        Node::P(ch) | Node::Q(ch) if ch.len() == 1 => normalize(ch.into_iter().next().unwrap()),
        Node::P(ch) => Node::P(ch.into_iter().map(normalize).collect()),
        Node::Q(ch) if ch.len() == 2 => Node::P(ch.into_iter().map(normalize).collect()),
        Node::Q(ch) => Node::Q(ch.into_iter().map(normalize).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::next_permutation;
    use alloc::vec;
    use proptest::prelude::*;

    fn consecutive_in(perm: &[usize], set: &[usize]) -> bool {
        let pos: Vec<usize> = perm
            .iter()
            .enumerate()
            .filter(|(_, x)| set.contains(x))
            .map(|(i, _)| i)
            .collect();
        pos.is_empty() || pos.last().unwrap() - pos[0] + 1 == pos.len()
    }

    fn brute_count(n: usize, sets: &[Vec<usize>]) -> u128 {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            if sets.iter().all(|s| consecutive_in(&perm, s)) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                return count;
            }
        }
    }

    #[test]
    fn simple_chain() {
        let mut t = PqTree::new(4);
        t.reduce(&[0, 1]).unwrap();
        t.reduce(&[1, 2]).unwrap();
        t.reduce(&[2, 3]).unwrap();
        let f = t.frontier();
        assert!(f == vec![0, 1, 2, 3] || f == vec![3, 2, 1, 0]);
        assert_eq!(t.permutation_count(), 2);
    }

    #[test]
    fn obstruction_is_rejected_and_tree_preserved() {
        // Three sets pairwise overlapping around a common element: a claw.
        let mut t = PqTree::new(4);
        t.reduce(&[0, 1]).unwrap();
        t.reduce(&[0, 2]).unwrap();
        let before = t.clone();
        assert_eq!(t.reduce(&[0, 3]), Err(Infeasible));
        assert_eq!(t, before);
    }

    #[test]
    fn trivial_constraints_are_noops() {
        let mut t = PqTree::new(3);
        t.reduce(&[]).unwrap();
        t.reduce(&[1]).unwrap();
        t.reduce(&[0, 1, 2]).unwrap();
        assert_eq!(t.permutation_count(), 6);
        assert_eq!(PqTree::new(0).frontier(), Vec::<usize>::new());
    }

    fn constraint_sets() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
        (1usize..=7).prop_flat_map(|n| {
            let set = proptest::collection::vec(0..n, 0..=n);
            (Just(n), proptest::collection::vec(set, 0..6))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn agrees_with_exhaustive_enumeration((n, sets) in constraint_sets()) {
            let mut t = PqTree::new(n);
            let ok = sets.iter().all(|s| t.reduce(s).is_ok());
            let expected = brute_count(n, &sets);
            if ok {
                prop_assert_eq!(t.permutation_count(), expected);
                let f = t.frontier();
                prop_assert!(sets.iter().all(|s| consecutive_in(&f, s)));
                let mut sorted = f.clone();
                sorted.sort();
                prop_assert_eq!(sorted, (0..n).collect::<Vec<_>>());
            } else {
                prop_assert_eq!(expected, 0);
            }
        }
    }
}
