//! Closed-form `F`, `HM1` and `RM2` of corona joins and subdivision-vertex joins.
//!
//! Evaluators read only the factors' [`GraphParams`]; they never build the product. Sums over
//! the edges of `S(G1)` that appear in the hyper Zagreb and reduced second Zagreb formulas of
//! `G1 ∔ G2` are closed with two identities: each original vertex `u` lies on exactly `d(u)`
//! subdivision edges, so `Σ_{uv∈E(S(G1))} d(u) = M1(G1)` and `Σ_{uv∈E(S(G1))} d(u)² = F(G1)`.
//!
//! The formulas are degree-local, so they hold for disconnected and edgeless factors too.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::indices::{GraphParams, IndexKind};
use crate::products::{self, ProductGraph, ProductKind};
use crate::scalar::{Checked, ExactInt, Overflow};

/// The two products with closed-form index formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    CoronaJoin,
    SubdivisionVertexJoin,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::CoronaJoin, Variant::SubdivisionVertexJoin];

    pub fn product_kind(self) -> ProductKind {
        match self {
            Variant::CoronaJoin => ProductKind::CoronaJoin,
            Variant::SubdivisionVertexJoin => ProductKind::SubdivisionVertexJoin,
        }
    }

    pub fn construct(self, g1: &Graph, g2: &Graph) -> ProductGraph {
        match self {
            Variant::CoronaJoin => products::corona_join(g1, g2),
            Variant::SubdivisionVertexJoin => products::subdivision_vertex_join(g1, g2),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.product_kind().fmt(f)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown product {0:?} (expected corona-join or sdvj)")]
pub struct UnknownVariant(pub String);

impl FromStr for Variant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "corona-join" | "coronajoin" => Ok(Variant::CoronaJoin),
            "sdvj" | "subdivision-vertex-join" => Ok(Variant::SubdivisionVertexJoin),
            _ => Err(UnknownVariant(s.to_string())),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("no closed form for {0}; only F, HM1 and RM2 are covered")]
    UnsupportedIndex(IndexKind),
    #[error("path/cycle expressions need l >= 3 and m >= 3, got l = {l}, m = {m}")]
    OutsideValidity { l: usize, m: usize },
}

/// Factor parameters lifted into checked arithmetic.
struct Factor<T> {
    n: Checked<T>,
    m: Checked<T>,
    zagreb1: Checked<T>,
    forgotten: Checked<T>,
    hyper: Checked<T>,
    reduced: Checked<T>,
}

impl<T: ExactInt> Factor<T> {
    fn lift(p: &GraphParams<T>) -> Self {
        Factor {
            n: Checked::count(p.n),
            m: Checked::count(p.m),
            zagreb1: Checked::new(p.zagreb1.clone()),
            forgotten: Checked::new(p.forgotten.clone()),
            hyper: Checked::new(p.hyper_zagreb.clone()),
            reduced: Checked::new(p.reduced_zagreb2.clone()),
        }
    }
}

/// `F(G1 ⊕ G2) = F1 + n1·F2 + 3n1n2·M1(G1) + 3n1²·M1(G2) + 6m1n1²n2² + 6m2n1³ + n1⁴n2(n2² + 1)`
pub fn f_corona_join<T: ExactInt>(p1: &GraphParams<T>, p2: &GraphParams<T>) -> Result<T, Overflow> {
    let (g1, g2) = (Factor::lift(p1), Factor::lift(p2));
    let (n1, m1, n2, m2) = (&g1.n, &g1.m, &g2.n, &g2.m);
    (&g1.forgotten
        + n1 * &g2.forgotten
        + 3 * n1 * n2 * &g1.zagreb1
        + 3 * n1.pow(2) * &g2.zagreb1
        + 6 * m1 * n1.pow(2) * n2.pow(2)
        + 6 * m2 * n1.pow(3)
        + n1.pow(4) * n2 * (n2.pow(2) + 1))
        .value()
}

/// `F(G1 ∔ G2) = F1 + F2 + 3m1·M1(G2) + m1(2 + n2)³ + 6m2m1² + m1³n2`
pub fn f_sdvj<T: ExactInt>(p1: &GraphParams<T>, p2: &GraphParams<T>) -> Result<T, Overflow> {
    let (g1, g2) = (Factor::lift(p1), Factor::lift(p2));
    let (m1, n2, m2) = (&g1.m, &g2.n, &g2.m);
    (&g1.forgotten
        + &g2.forgotten
        + 3 * m1 * &g2.zagreb1
        + m1 * (n2 + 2).pow(3)
        + 6 * m2 * m1.pow(2)
        + m1.pow(3) * n2)
        .value()
}

pub fn hm1_corona_join<T: ExactInt>(
    p1: &GraphParams<T>,
    p2: &GraphParams<T>,
) -> Result<T, Overflow> {
    let (g1, g2) = (Factor::lift(p1), Factor::lift(p2));
    let (n1, m1, n2, m2) = (&g1.n, &g1.m, &g2.n, &g2.m);
    (&g1.hyper
        + n1 * &g2.hyper
        + 5 * n1 * (n2 * &g1.zagreb1 + n1 * &g2.zagreb1)
        + 4 * n1 * (m1 * n1 * n2.pow(2) + m2 * n1.pow(2) + 2 * m1 * m2)
        + n1.pow(2) * (n2 + 1) * (4 * m1 * n2 + 4 * m2 * n1 + n1.pow(2) * n2 * (n2 + 1)))
        .value()
}

pub fn hm1_sdvj<T: ExactInt>(p1: &GraphParams<T>, p2: &GraphParams<T>) -> Result<T, Overflow> {
    let (g1, g2) = (Factor::lift(p1), Factor::lift(p2));
    let (m1, n2, m2) = (&g1.m, &g2.n, &g2.m);
    let sub_size = Checked::count(p1.subdivision_size());
    // Σ over E(S(G1)) of d(u)² + (4 + 2n2)·d(u)
    let residual = &g1.forgotten + (4 + 2 * n2) * &g1.zagreb1;
    let cross = m1 + n2 + 2;
    (m1 * (5 * &g2.zagreb1 + 4 * m1 * m2)
        + &g2.hyper
        + sub_size * (n2 + 2).pow(2)
        + m1 * &cross * (n2 * &cross + 4 * m2)
        + residual)
        .value()
}

pub fn rm2_corona_join<T: ExactInt>(
    p1: &GraphParams<T>,
    p2: &GraphParams<T>,
) -> Result<T, Overflow> {
    let (g1, g2) = (Factor::lift(p1), Factor::lift(p2));
    let (n1, m1, n2, m2) = (&g1.n, &g1.m, &g2.n, &g2.m);
    let hub = n1 * n2;
    (&g1.reduced
        + n1 * &g2.reduced
        + n1 * (n2 * &g1.zagreb1 + n1 * &g2.zagreb1)
        + m1 * &hub * (&hub - 2)
        + m2 * n1.pow(2) * (n1 - 2)
        + 2 * n1 * (2 * m1 * m2 + m1 * n2 * (n1 - 1) + m2 * n1 * (&hub - 1))
        + n1.pow(2) * n2 * (n1.pow(2) * n2 - &hub - n1 + 1))
        .value()
}

pub fn rm2_sdvj<T: ExactInt>(p1: &GraphParams<T>, p2: &GraphParams<T>) -> Result<T, Overflow> {
    let (g1, g2) = (Factor::lift(p1), Factor::lift(p2));
    let (m1, n2, m2) = (&g1.m, &g2.n, &g2.m);
    let sub_size = Checked::count(p1.subdivision_size());
    // Σ over E(S(G1)) of d(u)
    let residual = &g1.zagreb1;
    (&g2.reduced + m1 * (&g2.zagreb1 + m1 * m2 - 2 * m2) - sub_size * (n2 + 1)
        + m1 * (n2 + 1) * (2 * m2 + m1 * n2 - n2)
        + (n2 + 1) * residual)
        .value()
}

/// Dispatches to the evaluator for `(kind, variant)`.
pub fn evaluate<T: ExactInt>(
    kind: IndexKind,
    variant: Variant,
    p1: &GraphParams<T>,
    p2: &GraphParams<T>,
) -> Result<T, ClosedFormError> {
    let value = match (kind, variant) {
        (IndexKind::F, Variant::CoronaJoin) => f_corona_join(p1, p2),
        (IndexKind::F, Variant::SubdivisionVertexJoin) => f_sdvj(p1, p2),
        (IndexKind::HM1, Variant::CoronaJoin) => hm1_corona_join(p1, p2),
        (IndexKind::HM1, Variant::SubdivisionVertexJoin) => hm1_sdvj(p1, p2),
        (IndexKind::RM2, Variant::CoronaJoin) => rm2_corona_join(p1, p2),
        (IndexKind::RM2, Variant::SubdivisionVertexJoin) => rm2_sdvj(p1, p2),
        (kind, _) => return Err(ClosedFormError::UnsupportedIndex(kind)),
    };
    Ok(value?)
}

/// Indices with closed forms for both variants.
pub const COVERED_INDICES: [IndexKind; 3] = [IndexKind::F, IndexKind::HM1, IndexKind::RM2];

/// The index of `P_l ⊕ C_m` or `P_l ∔ C_m` as a polynomial in `l` and `m`.
///
/// The expressions hard-code `M1(P_l) = 4l − 6`, `F(P_l) = 8l − 14`, `HM1(P_l) = 16l − 30` and
/// `RM2(P_l) = l − 3`, which are only correct for `l ≥ 3`; smaller `l` or `m < 3` is rejected.
pub fn path_cycle_example<T: ExactInt>(
    kind: IndexKind,
    variant: Variant,
    l: usize,
    m: usize,
) -> Result<T, ClosedFormError> {
    if l < 3 || m < 3 {
        return Err(ClosedFormError::OutsideValidity { l, m });
    }
    let (l, m) = (&Checked::<T>::count(l), &Checked::<T>::count(m));
    let l1 = &(l - 1);
    let value = match (kind, variant) {
        (IndexKind::F, Variant::CoronaJoin) => {
            8 * l - 14
                + 8 * l * m
                + 3 * l * m * (4 * l - 6)
                + 12 * m * l.pow(2)
                + 6 * l.pow(2) * m.pow(2) * l1
                + 6 * m * l.pow(3)
                + l.pow(4) * m * (m.pow(2) + 1)
        }
        (IndexKind::F, Variant::SubdivisionVertexJoin) => {
            8 * l - 14
                + 8 * m
                + 12 * m * l1
                + l1 * (m + 2).pow(3)
                + 6 * m * l1.pow(2)
                + m * l1.pow(3)
        }
        (IndexKind::HM1, Variant::CoronaJoin) => {
            16 * l - 30
                + 16 * l * m
                + 5 * l * (m * (4 * l - 6) + 4 * l * m)
                + 4 * l * (l * m.pow(2) * l1 + m * l.pow(2) + 2 * m * l1)
                + l.pow(2) * (m + 1) * (4 * m * l1 + 4 * m * l + l.pow(2) * m * (m + 1))
        }
        (IndexKind::HM1, Variant::SubdivisionVertexJoin) => {
            let cross = l1 + m + 2;
            let residual = (8 * l - 14) + (4 + 2 * m) * (4 * l - 6);
            l1 * (20 * m + 4 * m * l1)
                + 16 * m
                + 2 * l1 * (m + 2).pow(2)
                + l1 * &cross * (m * &cross + 4 * m)
                + residual
        }
        (IndexKind::RM2, Variant::CoronaJoin) => {
            (l - 3)
                + l * m
                + l * (m * (4 * l - 6) + 4 * l * m)
                + l * m * l1 * (l * m - 2)
                + m * l.pow(2) * (l - 2)
                + 2 * l * (2 * m * l1 + m * l1.pow(2) + m * l * (l * m - 1))
                + l.pow(2) * m * (l.pow(2) * m - l * m - l + 1)
        }
        (IndexKind::RM2, Variant::SubdivisionVertexJoin) => {
            m + l1 * (4 * m + m * l1 - 2 * m) - 2 * l1 * (m + 1)
                + l1 * (m + 1) * (2 * m + m * l1 - m)
                + (m + 1) * (4 * l - 6)
        }
        (kind, _) => return Err(ClosedFormError::UnsupportedIndex(kind)),
    };
    Ok(value.value()?)
}
