//! JSON documents for everything the CLI reads or writes.
//!
//! Rationals are written as exact strings (`"3/2"`, `"4"`). On input they may
//! also be decimal strings or plain JSON numbers; both are parsed exactly from
//! their decimal text.

use std::collections::BTreeMap;

use cubicity_core::construct::{Branch, ConstructionTrace, Variant};
use cubicity_core::oracle::{ExactOutcome, SearchStats};
use cubicity_core::rational::{parse_rational, RationalDisplay};
use cubicity_core::{
    CliqueOrdering, CubeRepresentation, Graph, Interval, IntervalModel, Labelling, ParamReport, Rational,
    VerificationReport,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("record {index}: {message}")]
    Record { index: usize, message: String },
    #[error("duplicate interval id {0:?}")]
    DuplicateId(String),
    #[error("representation: {0}")]
    Representation(String),
}

pub fn rational_text(r: &Rational) -> String {
    RationalDisplay(r).to_string()
}

/// A rational as it appears in input documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalValue {
    Text(String),
    Number(serde_json::Number),
}

impl RationalValue {
    pub fn parse(&self) -> Result<Rational, String> {
        let text = match self {
            RationalValue::Text(s) => s.clone(),
            RationalValue::Number(n) => n.to_string(),
        };
        parse_rational(&text).map_err(|e| format!("{text:?}: {e}"))
    }
}

impl From<&Rational> for RationalValue {
    fn from(r: &Rational) -> Self {
        RationalValue::Text(rational_text(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdValue {
    Text(String),
    Number(i64),
}

impl IdValue {
    pub fn label(&self) -> String {
        match self {
            IdValue::Text(s) => s.clone(),
            IdValue::Number(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub id: IdValue,
    pub lo: RationalValue,
    pub hi: RationalValue,
}

/// An interval model plus the external id of each vertex; vertex `i` is the
/// `i`-th record.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedModel {
    pub model: IntervalModel,
    pub ids: Vec<String>,
}

pub fn parse_model(text: &str) -> Result<NamedModel, FormatError> {
    let records: Vec<IntervalRecord> = serde_json::from_str(text)?;
    let mut intervals = Vec::with_capacity(records.len());
    let mut ids = Vec::with_capacity(records.len());
    let mut seen = std::collections::BTreeSet::new();
    for (index, rec) in records.iter().enumerate() {
        let err = |message: String| FormatError::Record { index, message };
        let lo = rec.lo.parse().map_err(err)?;
        let hi = rec.hi.parse().map_err(err)?;
        if lo > hi {
            return Err(err(format!(
                "lo {} exceeds hi {}",
                rational_text(&lo),
                rational_text(&hi)
            )));
        }
        let label = rec.id.label();
        if !seen.insert(label.clone()) {
            return Err(FormatError::DuplicateId(label));
        }
        ids.push(label);
        intervals.push(Interval::new(lo, hi));
    }
    let model = IntervalModel::new(intervals).expect("endpoints checked above");
    Ok(NamedModel { model, ids })
}

pub fn model_records(model: &IntervalModel) -> Vec<IntervalRecord> {
    model
        .intervals()
        .iter()
        .enumerate()
        .map(|(i, iv)| IntervalRecord {
            id: IdValue::Number(i as i64),
            lo: (&iv.lo).into(),
            hi: (&iv.hi).into(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingDoc {
    pub cliques: Vec<Vec<usize>>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl From<&CliqueOrdering> for OrderingDoc {
    fn from(ord: &CliqueOrdering) -> Self {
        OrderingDoc {
            cliques: ord.cliques.iter().map(|c| c.as_slice().to_vec()).collect(),
            left: ord.left.clone(),
            right: ord.right.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingDoc {
    /// `(vertex, label)` pairs.
    pub eta: Vec<(usize, usize)>,
    pub primary: Vec<usize>,
    pub alpha: usize,
}

impl From<&Labelling> for LabellingDoc {
    fn from(lab: &Labelling) -> Self {
        LabellingDoc {
            eta: lab.eta.iter().copied().enumerate().collect(),
            primary: lab.primary.clone(),
            alpha: lab.alpha(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub psi: usize,
    pub alpha: usize,
    pub claw_center: Option<usize>,
    pub claw_leaves: Vec<usize>,
    /// `⌈log₂ψ⌉`, absent when `ψ = 0`.
    pub lower_bound: Option<u32>,
    /// `⌈log₂ψ⌉ + 2` for `ψ ≥ 2`.
    pub claw_dimension: Option<u32>,
    pub alpha_dimension: u32,
}

impl From<&ParamReport> for ParamsDoc {
    fn from(p: &ParamReport) -> Self {
        ParamsDoc {
            psi: p.psi,
            alpha: p.alpha,
            claw_center: p.psi_witness.center,
            claw_leaves: p.psi_witness.leaves.clone(),
            lower_bound: p.lower_bound,
            claw_dimension: (p.psi >= 2).then(|| cubicity_core::ceil_log2(p.psi) + 2),
            alpha_dimension: cubicity_core::ceil_log2(p.alpha),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub dimension: usize,
    pub side: RationalValue,
    pub coords: Vec<Vec<RationalValue>>,
}

impl From<&CubeRepresentation> for RepresentationDoc {
    fn from(rep: &CubeRepresentation) -> Self {
        RepresentationDoc {
            dimension: rep.dimension,
            side: (&rep.side).into(),
            coords: rep
                .coords
                .iter()
                .map(|row| row.iter().map(Into::into).collect())
                .collect(),
        }
    }
}

impl RepresentationDoc {
    pub fn to_representation(&self) -> Result<CubeRepresentation, FormatError> {
        let bad = FormatError::Representation;
        let side = self.side.parse().map_err(bad)?;
        let coords = self
            .coords
            .iter()
            .map(|row| row.iter().map(|x| x.parse()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(bad)?;
        CubeRepresentation::new(self.dimension, side, coords).map_err(|e| FormatError::Representation(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub ok: bool,
    /// `(u, v, dimension)`: an edge whose cubes are apart in that dimension.
    pub missing_adjacency: Vec<(usize, usize, usize)>,
    /// `(u, v)`: a non-edge whose cubes overlap in every dimension.
    pub missing_separation: Vec<(usize, usize)>,
    /// Non-edges separated by each dimension.
    pub dimension_stats: Vec<usize>,
}

impl From<&VerificationReport> for VerificationDoc {
    fn from(r: &VerificationReport) -> Self {
        VerificationDoc {
            ok: r.ok,
            missing_adjacency: r.missing_adjacency.clone(),
            missing_separation: r.missing_separation.clone(),
            dimension_stats: r.dimension_stats.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub psi: usize,
    pub psi_prime: usize,
    pub p: u32,
    pub added: usize,
    pub anchor: Option<usize>,
    pub original: Vec<usize>,
    pub padded_graph: String,
    pub ordering: OrderingDoc,
    pub labelling: LabellingDoc,
    pub f: Vec<RationalValue>,
    pub gamma: Vec<usize>,
    pub bit_index: Vec<u32>,
    /// Per vertex and dimension: `"R"` places the cube by the right end of
    /// the vertex's clique run, `"L"` by the left end.
    pub branches: Vec<String>,
    pub padded_coords: Vec<Vec<RationalValue>>,
}

impl From<&ConstructionTrace> for TraceDoc {
    fn from(t: &ConstructionTrace) -> Self {
        TraceDoc {
            psi: t.psi,
            psi_prime: t.psi_prime,
            p: t.padded.p,
            added: t.padded.added,
            anchor: t.padded.anchor,
            original: t.padded.original.as_slice().to_vec(),
            padded_graph: t.padded.graph.to_edge_list(),
            ordering: (&t.padded.ordering).into(),
            labelling: (&t.labelling).into(),
            f: t.f.values.iter().map(Into::into).collect(),
            gamma: t.gamma.values.clone(),
            bit_index: t.bit_index.clone(),
            branches: t
                .branches
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|b| if *b == Branch::Right { 'R' } else { 'L' })
                        .collect()
                })
                .collect(),
            padded_coords: t
                .padded_coords
                .iter()
                .map(|row| row.iter().map(Into::into).collect())
                .collect(),
        }
    }
}

pub fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Claw => "claw",
        Variant::Alpha => "alpha",
        Variant::Degenerate => "degenerate",
    }
}

/// Output of `construct`. `verify` accepts this or a bare representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructDoc {
    pub variant: String,
    pub normalized: bool,
    pub representation: RepresentationDoc,
    pub verification: VerificationDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDoc>,
}

pub fn parse_representation(text: &str) -> Result<CubeRepresentation, FormatError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        Wrapped { representation: RepresentationDoc },
        Bare(RepresentationDoc),
    }
    match serde_json::from_str(text)? {
        Either::Wrapped { representation } | Either::Bare(representation) => representation.to_representation(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub permutations: u64,
    pub candidates: usize,
    pub cover_nodes: u64,
}

impl From<&SearchStats> for StatsDoc {
    fn from(s: &SearchStats) -> Self {
        StatsDoc {
            permutations: s.permutations,
            candidates: s.candidates,
            cover_nodes: s.cover_nodes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactDoc {
    /// `None` when no cover of size at most `max_b` exists.
    pub cub: Option<usize>,
    pub max_b: usize,
    /// One entry per indifference supergraph in the witness: the non-edges it omits.
    pub witness: Vec<Vec<(usize, usize)>>,
    /// A unit-interval vertex order for each witness supergraph.
    pub witness_orders: Vec<Vec<usize>>,
    pub stats: StatsDoc,
}

impl ExactDoc {
    pub fn new(outcome: &ExactOutcome, max_b: usize) -> Self {
        match outcome {
            ExactOutcome::Exact(r) => ExactDoc {
                cub: Some(r.cub),
                max_b,
                witness: r.witness.clone(),
                witness_orders: r.witness_orders.clone(),
                stats: (&r.stats).into(),
            },
            ExactOutcome::Exceeded { stats, .. } => ExactDoc {
                cub: None,
                max_b,
                witness: Vec::new(),
                witness_orders: Vec::new(),
                stats: stats.into(),
            },
        }
    }
}

/// Parsed CLI input: an edge list, or an interval model with its graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Graph(Graph),
    Model(NamedModel),
}

impl Input {
    /// JSON (leading `[`) is an interval model; anything else an edge list.
    pub fn parse(text: &str) -> anyhow::Result<Input> {
        if text.trim_start().starts_with('[') {
            Ok(Input::Model(parse_model(text)?))
        } else {
            Ok(Input::Graph(cubicity_core::parse_graph(text)?))
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::Model(m) => cubicity_core::model_to_graph(&m.model),
        }
    }
}

/// Histogram rows keyed by `(ψ, α, exact cub, constructed dim)`.
pub type Histogram = BTreeMap<(usize, usize, usize, usize), u64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_accepts_strings_and_numbers() {
        let text = r#"[{"id":"a","lo":"0","hi":"3/2"},{"id":7,"lo":1.25,"hi":"2.5"}]"#;
        let m = parse_model(text).unwrap();
        assert_eq!(m.ids, ["a", "7"]);
        let iv = m.model.intervals();
        assert_eq!(iv[0].hi, Rational::new(3, 2));
        assert_eq!(iv[1].lo, Rational::new(5, 4));
        assert_eq!(iv[1].hi, Rational::new(5, 2));
    }

    #[test]
    fn model_rejects_bad_records() {
        assert!(matches!(
            parse_model(r#"[{"id":0,"lo":"2","hi":"1"}]"#),
            Err(FormatError::Record { index: 0, .. })
        ));
        assert!(matches!(
            parse_model(r#"[{"id":0,"lo":"1/0","hi":"1"}]"#),
            Err(FormatError::Record { index: 0, .. })
        ));
        assert!(matches!(
            parse_model(r#"[{"id":0,"lo":0,"hi":1},{"id":"0","lo":0,"hi":1}]"#),
            Err(FormatError::DuplicateId(_))
        ));
    }

    #[test]
    fn model_round_trip() {
        let m = parse_model(r#"[{"id":0,"lo":"1/3","hi":"2"},{"id":1,"lo":"-1","hi":"0"}]"#).unwrap();
        let text = serde_json::to_string(&model_records(&m.model)).unwrap();
        assert_eq!(text, r#"[{"id":0,"lo":"1/3","hi":"2"},{"id":1,"lo":"-1","hi":"0"}]"#);
        assert_eq!(parse_model(&text).unwrap(), m);
    }

    #[test]
    fn representation_round_trip_both_shapes() {
        let rep = CubeRepresentation::new(
            2,
            Rational::new(3, 2),
            vec![
                vec![Rational::new(0, 1), Rational::new(-1, 2)],
                vec![Rational::new(7, 3), Rational::new(1, 1)],
            ],
        )
        .unwrap();
        let doc = RepresentationDoc::from(&rep);
        let bare = serde_json::to_string(&doc).unwrap();
        assert_eq!(parse_representation(&bare).unwrap(), rep);
        let wrapped = format!(r#"{{"variant":"claw","representation":{bare}}}"#);
        assert_eq!(parse_representation(&wrapped).unwrap(), rep);
    }

    #[test]
    fn representation_shape_checked() {
        let text = r#"{"dimension":2,"side":"1","coords":[["0"]]}"#;
        assert!(matches!(
            parse_representation(text),
            Err(FormatError::Representation(_))
        ));
    }

    #[test]
    fn input_detection() {
        assert!(matches!(Input::parse("2 1\n0 1\n").unwrap(), Input::Graph(_)));
        let m = Input::parse(r#" [{"id":0,"lo":0,"hi":1},{"id":1,"lo":1,"hi":2}]"#).unwrap();
        assert_eq!(m.graph(), Graph::path(2));
        assert!(Input::parse("2 1\n0 0\n").is_err());
    }
}
