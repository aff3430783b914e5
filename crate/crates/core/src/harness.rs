//! Graph sources, the differential verification run, and path/cycle tables.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::closed_forms::{self, path_cycle_example, ClosedFormError, Variant, COVERED_INDICES};
use crate::graph::{self, Graph, GraphError, ParseError};
use crate::indices::{index, GraphParams, IndexError, IndexKind};
use crate::rng::SplitMix64;
use crate::{IndexValue, Params};

#[derive(Error, Debug)]
pub enum SourceError {
    #[error("bad graph spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Error, Debug)]
pub enum HarnessError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Where a factor graph comes from: a generator spec or an edge-list file.
///
/// Generator specs: `path:l`, `cycle:m`, `complete:n` (alias `k:n`), `star:k`,
/// `random:n:p:seed`. Anything else is taken as a file path.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Random { n: usize, p: f64, seed: u64 },
    File(PathBuf),
}

impl GraphSource {
    pub fn build(&self) -> Result<Graph, SourceError> {
        Ok(match *self {
            GraphSource::Path(l) => graph::path(l)?,
            GraphSource::Cycle(m) => graph::cycle(m)?,
            GraphSource::Complete(n) => graph::complete(n)?,
            GraphSource::Star(k) => graph::star(k)?,
            GraphSource::Random { n, p, seed } => graph::random_graph(n, p, seed)?,
            GraphSource::File(ref path) => {
                let text = std::fs::read_to_string(path).map_err(|source| SourceError::Io {
                    path: path.clone(),
                    source,
                })?;
                graph::read_edge_list(&text).map_err(|source| SourceError::Parse {
                    path: path.clone(),
                    source,
                })?
            }
        })
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Path(l) => write!(f, "path:{l}"),
            GraphSource::Cycle(m) => write!(f, "cycle:{m}"),
            GraphSource::Complete(n) => write!(f, "complete:{n}"),
            GraphSource::Star(k) => write!(f, "star:{k}"),
            GraphSource::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
            GraphSource::File(path) => write!(f, "{}", path.display()),
        }
    }
}

impl FromStr for GraphSource {
    type Err = SourceError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let bad = |reason: &str| SourceError::BadSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let single = || -> Result<usize, SourceError> {
            match args.as_slice() {
                [n] => n.parse().map_err(|_| bad("expected a vertex count")),
                _ => Err(bad("expected exactly one parameter")),
            }
        };
        match name {
            "path" => Ok(GraphSource::Path(single()?)),
            "cycle" => Ok(GraphSource::Cycle(single()?)),
            "complete" | "k" => Ok(GraphSource::Complete(single()?)),
            "star" => Ok(GraphSource::Star(single()?)),
            "random" => match args.as_slice() {
                [n, p, seed] => Ok(GraphSource::Random {
                    n: n.parse().map_err(|_| bad("expected a vertex count"))?,
                    p: p.parse().map_err(|_| bad("expected a probability"))?,
                    seed: seed.parse().map_err(|_| bad("expected an integer seed"))?,
                }),
                _ => Err(bad("expected random:n:p:seed")),
            },
            _ => Ok(GraphSource::File(PathBuf::from(spec))),
        }
    }
}

/// Paths `P_1..P_8`, cycles `C_3..C_8`, complete graphs `K_1..K_6`, stars `K_{1,1}..K_{1,6}`.
pub fn catalog() -> Vec<GraphSource> {
    (1..=8)
        .map(GraphSource::Path)
        .chain((3..=8).map(GraphSource::Cycle))
        .chain((1..=6).map(GraphSource::Complete))
        .chain((1..=6).map(GraphSource::Star))
        .collect()
}

/// Seeded random factor pairs.
///
/// One [`SplitMix64`] stream seeded with `seed` drives everything; each factor draws, in order,
/// its order `1 + below(max_order)`, its edge probability `below(101) / 100` and its own
/// graph seed `next_u64()`.
pub fn fuzz_pairs(seed: u64, count: usize, max_order: usize) -> Vec<(GraphSource, GraphSource)> {
    let mut rng = SplitMix64::new(seed);
    let mut factor = || GraphSource::Random {
        n: 1 + rng.below(max_order.max(1) as u64) as usize,
        p: rng.below(101) as f64 / 100.0,
        seed: rng.next_u64(),
    };
    (0..count).map(|_| (factor(), factor())).collect()
}

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_FUZZ: usize = 200;
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Include all ordered pairs of [`catalog`] graphs.
    pub catalog: bool,
    pub seed: u64,
    pub fuzz: usize,
    /// Largest order of a fuzzed factor.
    pub max_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            catalog: true,
            seed: DEFAULT_SEED,
            fuzz: DEFAULT_FUZZ,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl VerifyConfig {
    /// Factor pairs in report order: catalog pairs row-major, then fuzz pairs in seed order.
    pub fn pairs(&self) -> Vec<(GraphSource, GraphSource)> {
        let mut pairs = Vec::new();
        if self.catalog {
            let cat = catalog();
            for a in &cat {
                for b in &cat {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        pairs.extend(fuzz_pairs(self.seed, self.fuzz, self.max_order));
        pairs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub product: Variant,
    pub g1: String,
    pub g2: String,
    pub index: IndexKind,
    pub direct: IndexValue,
    pub closed_form: IndexValue,
}

impl VerificationRecord {
    pub fn matches(&self) -> bool {
        self.direct == self.closed_form
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({} {} {}): direct {} vs closed form {}",
            self.index, self.g1, self.product, self.g2, self.direct, self.closed_form
        )
    }
}

#[derive(Serialize)]
struct Row<'a> {
    product: String,
    g1: &'a str,
    g2: &'a str,
    index: &'static str,
    direct: String,
    closed_form: String,
    #[serde(rename = "match")]
    matched: bool,
}

impl<'a> From<&'a VerificationRecord> for Row<'a> {
    fn from(r: &'a VerificationRecord) -> Self {
        Row {
            product: r.product.to_string(),
            g1: &r.g1,
            g2: &r.g2,
            index: r.index.name(),
            direct: r.direct.to_string(),
            closed_form: r.closed_form.to_string(),
            matched: r.matches(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(VerificationRecord::matches)
    }

    pub fn first_mismatch(&self) -> Option<&VerificationRecord> {
        self.records.iter().find(|r| !r.matches())
    }

    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.matches()).count()
    }

    /// 0 when every record matches, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Columns `product,g1,g2,index,direct,closed_form,match`.
    pub fn to_csv(&self) -> Result<String, HarnessError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for record in &self.records {
            writer.serialize(Row::from(record))?;
        }
        if self.records.is_empty() {
            writer.write_record([
                "product",
                "g1",
                "g2",
                "index",
                "direct",
                "closed_form",
                "match",
            ])?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Array of objects with the CSV fields; index values are decimal strings so they stay
    /// exact beyond 64 bits.
    pub fn to_json(&self) -> Result<String, HarnessError> {
        let rows: Vec<Row> = self.records.iter().map(Row::from).collect();
        let mut text = serde_json::to_string_pretty(&rows)?;
        text.push('\n');
        Ok(text)
    }
}

/// Closed-form evaluator signature, so tests can substitute a corrupted one.
pub type Evaluator =
    dyn Fn(IndexKind, Variant, &Params, &Params) -> Result<IndexValue, ClosedFormError> + Sync;

pub fn verify(config: &VerifyConfig) -> Result<VerificationReport, HarnessError> {
    verify_with(config, &closed_forms::evaluate::<IndexValue>)
}

/// Compares `evaluator` against direct computation on every product of every configured pair,
/// for both variants and each of `F`, `HM1`, `RM2`.
pub fn verify_with(
    config: &VerifyConfig,
    evaluator: &Evaluator,
) -> Result<VerificationReport, HarnessError> {
    let mut cache: HashMap<String, (Graph, Params)> = HashMap::new();
    let mut records = Vec::new();
    for (s1, s2) in config.pairs() {
        let (k1, k2) = (s1.to_string(), s2.to_string());
        for (key, source) in [(&k1, &s1), (&k2, &s2)] {
            if !cache.contains_key(key) {
                let g = source.build()?;
                let p = GraphParams::from_graph(&g)?;
                cache.insert(key.clone(), (g, p));
            }
        }
        let (g1, p1) = &cache[&k1];
        let (g2, p2) = &cache[&k2];
        for variant in Variant::ALL {
            let product = variant.construct(g1, g2);
            for kind in COVERED_INDICES {
                records.push(VerificationRecord {
                    product: variant,
                    g1: k1.clone(),
                    g2: k2.clone(),
                    index: kind,
                    direct: index(kind, &product.graph)?,
                    closed_form: evaluator(kind, variant, p1, p2)?,
                });
            }
        }
    }
    Ok(VerificationReport { records })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub l: usize,
    pub m: usize,
    pub expression: IndexValue,
    pub direct: IndexValue,
}

impl TableCell {
    pub fn flagged(&self) -> bool {
        self.expression != self.direct
    }
}

/// `P_l` / `C_m` grid: each cell holds the polynomial expression and the index of the
/// explicitly built product.
pub fn table(
    kind: IndexKind,
    variant: Variant,
    ls: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
) -> Result<Vec<TableCell>, HarnessError> {
    if *ls.start() < 3 || *ms.start() < 3 {
        return Err(ClosedFormError::OutsideValidity {
            l: *ls.start(),
            m: *ms.start(),
        }
        .into());
    }
    if !COVERED_INDICES.contains(&kind) {
        return Err(ClosedFormError::UnsupportedIndex(kind).into());
    }
    let mut cells = Vec::new();
    for l in ls {
        let path = graph::path(l).map_err(SourceError::from)?;
        for m in ms.clone() {
            let cycle = graph::cycle(m).map_err(SourceError::from)?;
            cells.push(TableCell {
                l,
                m,
                expression: path_cycle_example(kind, variant, l, m)?,
                direct: index(kind, &variant.construct(&path, &cycle).graph)?,
            });
        }
    }
    Ok(cells)
}

/// Columns `l,m,expression,direct,mismatch`.
pub fn table_csv(cells: &[TableCell]) -> Result<String, HarnessError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["l", "m", "expression", "direct", "mismatch"])?;
    for c in cells {
        writer.write_record([
            c.l.to_string(),
            c.m.to_string(),
            c.expression.to_string(),
            c.direct.to_string(),
            c.flagged().to_string(),
        ])?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Parses `a..b`, `a..=b` (both inclusive) or a single value `a`.
pub fn parse_range(text: &str) -> Option<RangeInclusive<usize>> {
    let text = text.trim();
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some(a..=b)
}
