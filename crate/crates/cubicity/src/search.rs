//! Tightness search: does any interval graph need more than `⌈log₂ψ⌉`
//! dimensions?
//!
//! Each sampled interval graph gets its claw number, its exact cubicity from
//! the brute-force oracle, and the dimension of the best construction. A
//! graph with `ψ ≥ 2` and exact cubicity above `⌈log₂ψ⌉` is a counterexample
//! to tightness of the lower bound (none is known). Exact cubicity above
//! either constructive upper bound, or a construction that fails
//! verification, is an implementation bug and lands in `violations`.

use std::fmt::Write as _;

use cubicity_core::oracle::{exact_cubicity, ExactOutcome, OracleError, DEFAULT_MAX_B, ORACLE_MAX_VERTICES};
use cubicity_core::params::param_report;
use cubicity_core::{
    build_best, ceil_log2, claw_number, label_vertices, model_to_graph, parse_graph, recognize_and_order,
    verify_representation, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::formats::Histogram;
use crate::gen::{sample_model, Dist};

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("n_max must be between 1 and {ORACLE_MAX_VERTICES}, got {0}")]
    NMax(usize),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub count: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Also run the stars `S(2)..S(6)`.
    pub inject_stars: bool,
}

/// Where an instance came from, enough to regenerate it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Origin {
    /// The `index`-th draw: a ChaCha8 stream `index` under the search seed.
    /// `n` is drawn from the upper half of `1..=n_max`, where claws appear.
    Sampled {
        index: u64,
        n: usize,
        dist: Dist,
    },
    Star {
        m: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub origin: Origin,
    pub psi: usize,
    pub alpha: usize,
    pub cub: usize,
    pub dim: usize,
    /// Edge-list text of the graph.
    pub graph: String,
}

impl Counterexample {
    /// Recomputes everything from the serialized graph alone.
    pub fn reverify(&self) -> bool {
        let Ok(g) = parse_graph(&self.graph) else { return false };
        let Ok(ord) = recognize_and_order(&g) else { return false };
        let (psi, _) = claw_number(&ord, &g);
        let Ok(outcome) = exact_cubicity(&g, DEFAULT_MAX_B) else {
            return false;
        };
        match outcome.cub() {
            Some(cub) => psi == self.psi && cub == self.cub && psi >= 2 && cub > ceil_log2(psi) as usize,
            None => psi >= 2 && psi == self.psi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub origin: Origin,
    pub message: String,
    pub graph: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCheck {
    pub m: usize,
    pub cub: Option<usize>,
    pub expected: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramRow {
    pub psi: usize,
    pub alpha: usize,
    pub cub: usize,
    pub dim: usize,
    pub count: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub graphs_tried: u64,
    pub counterexamples: Vec<Counterexample>,
    pub violations: Vec<Violation>,
    pub star_checks: Vec<StarCheck>,
    /// Disconnected unions of cliques (`ψ ≤ 1`): cubicity 1 against a
    /// logarithmic bound of 0. Counted apart; the bound is only meaningful
    /// for `ψ ≥ 2`.
    pub degenerate_above_bound: u64,
    #[serde(with = "histogram_rows")]
    pub histogram: Histogram,
}

mod histogram_rows {
    use super::*;

    pub fn serialize<S: serde::Serializer>(h: &Histogram, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<HistogramRow> = h
            .iter()
            .map(|(&(psi, alpha, cub, dim), &count)| HistogramRow {
                psi,
                alpha,
                cub,
                dim,
                count,
            })
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Histogram, D::Error> {
        let rows = Vec::<HistogramRow>::deserialize(d)?;
        Ok(rows
            .into_iter()
            .map(|r| ((r.psi, r.alpha, r.cub, r.dim), r.count))
            .collect())
    }
}

impl SearchReport {
    /// Associative and, up to the sorted lists, commutative.
    pub fn merge(mut self, other: SearchReport) -> SearchReport {
        self.graphs_tried += other.graphs_tried;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.origin);
        self.violations.extend(other.violations);
        self.violations.sort_by_key(|v| v.origin);
        self.star_checks.extend(other.star_checks);
        self.star_checks.sort_by_key(|s| s.m);
        self.degenerate_above_bound += other.degenerate_above_bound;
        for (k, c) in other.histogram {
            *self.histogram.entry(k).or_insert(0) += c;
        }
        self
    }

    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("psi,alpha,cub,dim,count\n");
        for (&(psi, alpha, cub, dim), &count) in &self.histogram {
            writeln!(out, "{psi},{alpha},{cub},{dim},{count}").unwrap();
        }
        out
    }
}

pub fn tightness_search(cfg: SearchConfig) -> Result<SearchReport, SearchError> {
    if cfg.n_max == 0 || cfg.n_max > ORACLE_MAX_VERTICES {
        return Err(SearchError::NMax(cfg.n_max));
    }
    let sampled = (0..cfg.count as u64).into_par_iter().map(|index| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(index);
        let n = rng.gen_range(cfg.n_max.div_ceil(2)..=cfg.n_max);
        let dist = Dist::ALL[rng.gen_range(0..Dist::ALL.len())];
        let g = model_to_graph(&sample_model(&mut rng, n, dist).expect("n >= 1"));
        examine(&g, Origin::Sampled { index, n, dist })
    });
    let stars = (2..=6usize)
        .filter(|_| cfg.inject_stars)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|m| examine(&Graph::star(m), Origin::Star { m }));
    sampled
        .chain(stars)
        .try_reduce(SearchReport::default, |a, b| Ok(a.merge(b)))
}

/// Runs one graph through every check and returns a single-instance report.
pub fn examine(g: &Graph, origin: Origin) -> Result<SearchReport, SearchError> {
    let mut report = SearchReport {
        graphs_tried: 1,
        ..SearchReport::default()
    };
    let violation = |message: String| Violation {
        origin,
        message,
        graph: g.to_edge_list(),
    };

    let ord = match recognize_and_order(g) {
        Ok(ord) => ord,
        Err(e) => {
            report
                .violations
                .push(violation(format!("sampled graph rejected: {e}")));
            return Ok(report);
        }
    };
    let lab = label_vertices(&ord).expect("sampled graphs are non-empty");
    let params = param_report(g, &ord, &lab);
    let (psi, alpha) = (params.psi, params.alpha);
    let lower = ceil_log2(psi) as usize;

    let dim = match build_best(g) {
        Ok((rep, variant)) => {
            match verify_representation(g, &rep) {
                Ok(v) if v.ok => {}
                _ => report
                    .violations
                    .push(violation(format!("{variant:?} construction fails verification"))),
            }
            rep.dimension
        }
        Err(e) => {
            report.violations.push(violation(format!("construction failed: {e}")));
            return Ok(report);
        }
    };

    let outcome = exact_cubicity(g, DEFAULT_MAX_B)?;
    let cub = match outcome {
        ExactOutcome::Exact(r) => r.cub,
        ExactOutcome::Exceeded { b_max, .. } => {
            report
                .violations
                .push(violation(format!("exact cubicity exceeds {b_max}")));
            return Ok(report);
        }
    };

    if cub < lower || cub > dim {
        report
            .violations
            .push(violation(format!("cub {cub} outside [{lower}, {dim}]")));
    }
    if psi >= 2 {
        let upper = (lower + 2).min(ceil_log2(alpha) as usize);
        if cub > upper {
            report
                .violations
                .push(violation(format!("cub {cub} above min(⌈log₂ψ⌉+2, ⌈log₂α⌉) = {upper}")));
        }
        if cub > lower {
            report.counterexamples.push(Counterexample {
                origin,
                psi,
                alpha,
                cub,
                dim,
                graph: g.to_edge_list(),
            });
        }
    } else if cub > lower {
        report.degenerate_above_bound += 1;
    }
    if let Origin::Star { m } = origin {
        report.star_checks.push(StarCheck {
            m,
            cub: Some(cub),
            expected: ceil_log2(m) as usize,
        });
    }
    report.histogram.insert((psi, alpha, cub, dim), 1);
    Ok(report)
}
