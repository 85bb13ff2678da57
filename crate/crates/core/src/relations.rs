//! Bracket relations modulo depth 3 and double zeta relations modulo `Z(k)`,
//! both generated from a basis of `E_k`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{check_weight, Result};
use crate::linalg::{kernel, same_span, span_rank};
use crate::matrices::{
    block_check, build_a, build_a_symbolic, build_b, build_d, conjugate_m, symmetry_product,
};
use crate::period::{a_vector, ek_basis, ek_dim_formula, q_vector, PeriodPoly};
use crate::scalar::canonical_integer_vector;
use crate::{RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Bracket,
    DoubleZeta,
}

/// One term: `{f_r, f_s}` for brackets, `Z(r, s)` for double zetas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTerm {
    pub r: usize,
    pub s: usize,
    #[serde(serialize_with = "serialize_display")]
    pub coeff: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub weight: usize,
    pub kind: RelationKind,
    pub terms: Vec<RelationTerm>,
    #[serde(serialize_with = "serialize_optional_display")]
    pub scalar_estimate: Option<Rational>,
}

pub fn serialize_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn serialize_optional_display<T: fmt::Display, S: Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

impl Relation {
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.terms.iter().map(|t| t.coeff.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_zero())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in self.terms.iter().filter(|t| !t.coeff.is_zero()) {
            let sign = match (first, t.coeff.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            f.write_str(sign)?;
            let mag = t.coeff.abs();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            match self.kind {
                RelationKind::Bracket => write!(f, "{{f{},f{}}}", t.r, t.s)?,
                RelationKind::DoubleZeta => write!(f, "Z({},{})", t.r, t.s)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        match self.kind {
            RelationKind::Bracket => f.write_str(" ≡ 0 (mod depth 3)"),
            RelationKind::DoubleZeta => write!(f, " ≡ 0 (mod Z({}))", self.weight),
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    check_weight(k as i64, k.is_multiple_of(2) && k >= 12, "even k ≥ 12")
}

/// `Σ a_i {f_{2i+1}, f_{k−2i−1}}` over `i ≤ ⌊(k−4)/4⌋` for a period polynomial.
pub fn bracket_relation(p: &PeriodPoly) -> Result<Relation> {
    let k = p.weight();
    let a = a_vector(p)?;
    let h = (k - 4) / 4;
    let coeffs = canonical_integer_vector(&a[..h]);
    let terms = (1..=h)
        .zip(coeffs)
        .map(|(i, coeff)| RelationTerm { r: 2 * i + 1, s: k - 2 * i - 1, coeff })
        .collect();
    Ok(Relation { weight: k, kind: RelationKind::Bracket, terms, scalar_estimate: None })
}

/// `Σ q_{r,k−r} Z(r, k−r)` for odd `r`, listed from `r = k−3` down to `3`,
/// scaled to coprime integers with the first nonzero coefficient positive.
pub fn double_zeta_relation(p: &PeriodPoly) -> Relation {
    let k = p.weight();
    let q = q_vector(p);
    let descending: Vec<Rational> = q.entries.iter().rev().cloned().collect();
    let terms = canonical_integer_vector(&descending)
        .into_iter()
        .enumerate()
        .map(|(j, coeff)| RelationTerm { r: k - 3 - 2 * j, s: 3 + 2 * j, coeff })
        .collect();
    Relation { weight: k, kind: RelationKind::DoubleZeta, terms, scalar_estimate: None }
}

/// Coefficients of a double zeta relation indexed by `r = 3, 5, …, k−3`.
pub fn ascending_vector(rel: &Relation) -> RatVector {
    let mut v: RatVector = rel.terms.iter().map(|t| Rational::from(t.coeff.clone())).collect();
    v.reverse();
    v
}

pub fn ihara_relations(k: usize) -> Result<Vec<Relation>> {
    check_k(k)?;
    ek_basis(k)?.iter().map(bracket_relation).collect()
}

/// Double zeta relations, each checked to lie in `Ker ᵗA`.
pub fn gkz_relations(k: usize) -> Result<Vec<Relation>> {
    check_k(k)?;
    let at = build_a(k)?.transpose();
    let rels: Vec<Relation> = ek_basis(k)?.iter().map(double_zeta_relation).collect();
    for rel in &rels {
        let image = at.mul_vec(&ascending_vector(rel))?;
        assert!(image.iter().all(Zero::is_zero), "weight {k} relation not in Ker tA: {rel}");
    }
    Ok(rels)
}

/// Every check tying `E_k`, `Ker A` and `Ker ᵗA` together at one weight.
#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub weight: usize,
    pub dim_formula: usize,
    pub dim_ek: usize,
    pub dim_ker_a: usize,
    pub dim_ker_at: usize,
    /// `None` above the weight where the symbolic construction is run.
    pub symbolic_a_matches: Option<bool>,
    pub symmetric: bool,
    pub block_structure: bool,
    pub duality: bool,
    pub q_equals_db_a: bool,
    /// `DB` maps a basis of `Ker A` to a basis of `Ker ᵗA`.
    pub bijective: bool,
    pub a: RatMatrix,
    pub m: RatMatrix,
    pub tadb: RatMatrix,
    #[serde(serialize_with = "serialize_vectors")]
    pub ker_a: Vec<RatVector>,
    #[serde(serialize_with = "serialize_vectors")]
    pub ker_at: Vec<RatVector>,
    pub period_basis: Vec<PeriodPoly>,
    pub bracket_relations: Vec<Relation>,
    pub zeta_relations: Vec<Relation>,
}

fn serialize_vectors<S: Serializer>(v: &[RatVector], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

pub const SYMBOLIC_MAX_WEIGHT: usize = 30;

impl CorrespondenceReport {
    pub fn all_ok(&self) -> bool {
        let dims = [self.dim_ek, self.dim_ker_a, self.dim_ker_at];
        dims.iter().all(|&d| d == self.dim_formula)
            && self.symbolic_a_matches != Some(false)
            && self.symmetric
            && self.block_structure
            && self.duality
            && self.q_equals_db_a
            && self.bijective
    }

    /// One line per check.
    pub fn summary_lines(&self) -> Vec<String> {
        let flag = |b: bool| if b { "ok" } else { "FAILED" };
        let mut lines = vec![
            format!(
                "dimensions: formula {}, E_k {}, Ker A {}, Ker tA {}",
                self.dim_formula, self.dim_ek, self.dim_ker_a, self.dim_ker_at
            ),
            match self.symbolic_a_matches {
                Some(b) => format!("symbolic A = closed form: {}", flag(b)),
                None => "symbolic A = closed form: skipped".to_string(),
            },
            format!("tADB symmetric: {}", flag(self.symmetric)),
            format!("block structure of M: {}", flag(self.block_structure)),
            format!("Ker tA = DB Ker A: {}", flag(self.duality)),
            format!("q = DB a on the basis: {}", flag(self.q_equals_db_a)),
            format!("DB carries a basis to a basis: {}", flag(self.bijective)),
        ];
        lines.extend(self.bracket_relations.iter().map(|r| r.to_string()));
        lines.extend(self.zeta_relations.iter().map(|r| r.to_string()));
        lines
    }
}

pub fn correspondence_report(k: usize) -> Result<CorrespondenceReport> {
    check_weight(k as i64, k.is_multiple_of(2) && (12..=40).contains(&k), "even 12 ≤ k ≤ 40")?;
    let n = (k - 4) / 2;
    let a = build_a(k)?;
    let db = build_d(k)?.try_mul(&build_b(k)?)?;
    let basis = ek_basis(k)?;
    let ker_a = kernel(&a);
    let ker_at = kernel(&a.transpose());
    let mapped: Vec<RatVector> = ker_a.iter().map(|v| db.mul_vec(v)).collect::<Result<_>>()?;
    let a_vectors: Vec<RatVector> = basis.iter().map(a_vector).collect::<Result<_>>()?;
    let mut q_equals_db_a = true;
    for (p, av) in basis.iter().zip(&a_vectors) {
        q_equals_db_a &= q_vector(p).entries == db.mul_vec(av)?;
    }
    let m = conjugate_m(k)?;
    let tadb = symmetry_product(k)?;
    Ok(CorrespondenceReport {
        weight: k,
        dim_formula: ek_dim_formula(k)?,
        dim_ek: basis.len(),
        dim_ker_a: ker_a.len(),
        dim_ker_at: ker_at.len(),
        symbolic_a_matches: (k <= SYMBOLIC_MAX_WEIGHT).then(|| build_a_symbolic(k).map(|s| s == a)).transpose()?,
        symmetric: tadb.is_symmetric(),
        block_structure: block_check(&m, k)?,
        duality: same_span(&ker_at, &mapped, n) && same_span(&a_vectors, &ker_a, n),
        q_equals_db_a,
        bijective: span_rank(&mapped, n) == ker_a.len() && ker_a.len() == ker_at.len(),
        a,
        m,
        tadb,
        ker_a,
        ker_at,
        bracket_relations: basis.iter().map(bracket_relation).collect::<Result<_>>()?,
        zeta_relations: gkz_relations(k)?,
        period_basis: basis,
    })
}
