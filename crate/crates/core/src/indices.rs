//! Degree-based topological indices, computed directly from a [`Graph`].
//!
//! `M1` and `F` have both a vertex-sum and an edge-sum definition; both are evaluated and
//! must agree, otherwise [`IndexError::FormMismatch`] is returned.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::{Checked, ExactInt, Overflow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexKind {
    /// First Zagreb index, `Σ d(v)²`.
    M1,
    /// Second Zagreb index, `Σ_{uv} d(u)d(v)`.
    M2,
    /// Forgotten index, `Σ d(v)³`.
    F,
    /// First hyper Zagreb index, `Σ_{uv} (d(u)+d(v))²`.
    HM1,
    /// Reduced second Zagreb index, `Σ_{uv} (d(u)−1)(d(v)−1)`.
    RM2,
}

impl IndexKind {
    pub const ALL: [IndexKind; 5] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::HM1,
        IndexKind::RM2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::M1 => "M1",
            IndexKind::M2 => "M2",
            IndexKind::F => "F",
            IndexKind::HM1 => "HM1",
            IndexKind::RM2 => "RM2",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown index kind {0:?} (expected one of M1, M2, F, HM1, RM2)")]
pub struct UnknownIndexKind(pub String);

impl FromStr for IndexKind {
    type Err = UnknownIndexKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownIndexKind(s.to_string()))
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("vertex-sum and edge-sum forms of {0} disagree")]
    FormMismatch(IndexKind),
}

fn vertex_sum<T: ExactInt>(g: &Graph, term: impl Fn(Checked<T>) -> Checked<T>) -> Checked<T> {
    g.degree_slice()
        .iter()
        .map(|&d| term(Checked::count(d)))
        .sum()
}

fn edge_sum<T: ExactInt>(
    g: &Graph,
    term: impl Fn(Checked<T>, Checked<T>) -> Checked<T>,
) -> Checked<T> {
    g.edges()
        .iter()
        .map(|&(u, v)| term(Checked::count(g.degree(u)), Checked::count(g.degree(v))))
        .sum()
}

pub fn first_zagreb_vertex_form<T: ExactInt>(g: &Graph) -> Result<T, Overflow> {
    vertex_sum(g, |d| &d * &d).value()
}

pub fn first_zagreb_edge_form<T: ExactInt>(g: &Graph) -> Result<T, Overflow> {
    edge_sum(g, |du, dv| du + dv).value()
}

pub fn first_zagreb<T: ExactInt>(g: &Graph) -> Result<T, IndexError> {
    agree(
        IndexKind::M1,
        first_zagreb_vertex_form(g)?,
        first_zagreb_edge_form(g)?,
    )
}

pub fn second_zagreb<T: ExactInt>(g: &Graph) -> Result<T, IndexError> {
    Ok(edge_sum(g, |du, dv| du * dv).value()?)
}

pub fn forgotten_vertex_form<T: ExactInt>(g: &Graph) -> Result<T, Overflow> {
    vertex_sum(g, |d| d.pow(3)).value()
}

pub fn forgotten_edge_form<T: ExactInt>(g: &Graph) -> Result<T, Overflow> {
    edge_sum(g, |du, dv| du.pow(2) + dv.pow(2)).value()
}

pub fn forgotten<T: ExactInt>(g: &Graph) -> Result<T, IndexError> {
    agree(
        IndexKind::F,
        forgotten_vertex_form(g)?,
        forgotten_edge_form(g)?,
    )
}

pub fn hyper_zagreb<T: ExactInt>(g: &Graph) -> Result<T, IndexError> {
    Ok(edge_sum(g, |du, dv| (du + dv).pow(2)).value()?)
}

pub fn reduced_second_zagreb<T: ExactInt>(g: &Graph) -> Result<T, IndexError> {
    Ok(edge_sum(g, |du, dv| (du - 1) * (dv - 1)).value()?)
}

fn agree<T: ExactInt>(kind: IndexKind, a: T, b: T) -> Result<T, IndexError> {
    if a == b {
        Ok(a)
    } else {
        Err(IndexError::FormMismatch(kind))
    }
}

pub fn index<T: ExactInt>(kind: IndexKind, g: &Graph) -> Result<T, IndexError> {
    match kind {
        IndexKind::M1 => first_zagreb(g),
        IndexKind::M2 => second_zagreb(g),
        IndexKind::F => forgotten(g),
        IndexKind::HM1 => hyper_zagreb(g),
        IndexKind::RM2 => reduced_second_zagreb(g),
    }
}

/// Order, size and the five indices of one factor graph.
///
/// This is everything the closed-form evaluators are allowed to see. Values need not come from
/// a real graph; [`GraphParams::from_graph`] is the consistent constructor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphParams<T> {
    pub n: usize,
    pub m: usize,
    pub zagreb1: T,
    pub zagreb2: T,
    pub forgotten: T,
    pub hyper_zagreb: T,
    pub reduced_zagreb2: T,
}

impl<T: ExactInt> GraphParams<T> {
    pub fn from_graph(g: &Graph) -> Result<Self, IndexError> {
        Ok(GraphParams {
            n: g.order(),
            m: g.size(),
            zagreb1: first_zagreb(g)?,
            zagreb2: second_zagreb(g)?,
            forgotten: forgotten(g)?,
            hyper_zagreb: hyper_zagreb(g)?,
            reduced_zagreb2: reduced_second_zagreb(g)?,
        })
    }

    pub fn get(&self, kind: IndexKind) -> &T {
        match kind {
            IndexKind::M1 => &self.zagreb1,
            IndexKind::M2 => &self.zagreb2,
            IndexKind::F => &self.forgotten,
            IndexKind::HM1 => &self.hyper_zagreb,
            IndexKind::RM2 => &self.reduced_zagreb2,
        }
    }

    /// Order of the subdivision graph, `n + m`.
    pub fn subdivision_order(&self) -> usize {
        self.n + self.m
    }

    /// Size of the subdivision graph, `2m`.
    pub fn subdivision_size(&self) -> usize {
        2 * self.m
    }
}

/// Shorthand for [`GraphParams::from_graph`].
pub fn graph_params<T: ExactInt>(g: &Graph) -> Result<GraphParams<T>, IndexError> {
    GraphParams::from_graph(g)
}
