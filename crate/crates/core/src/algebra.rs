//! SU(3) generators on the Fock space in the Gell-Mann and Weyl bases.
//!
//! `Q^a = a† (λ^a/2) a − b† (λ̃^a/2) b`, with `λ̃` the transpose, so that
//! `a†` transforms as the 3 and `b†` as the 3*. The Weyl generators
//! `E^α_β = a†^α a_β − b†_β b^α` span the same algebra over ℚ and satisfy
//! `Q^a = ½ Σ λ^a_{αβ} E^α_β`.

use num_traits::Zero;
use serde_json::json;

use crate::error::{check_index, Result};
use crate::fock::{Mode, StateVector};
use crate::operator::{commutator, k_minus, k_plus, number_a, number_b, LinearOperator};
use crate::report::{first_mismatch, CheckRecord};
use crate::scalar::{ExtScalar, Rational, Scalar};

pub type Matrix3 = [[ExtScalar; 3]; 3];

/// The eight Gell-Mann matrices, `lambda[a-1][row][col]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GellMannTable {
    lambda: [Matrix3; 8],
}

fn ext(w: i64, x: i64, y: (i64, i64)) -> ExtScalar {
    ExtScalar::new(
        Rational::from_int(w),
        Rational::from_int(x),
        Rational::new(y.0, y.1).unwrap(),
        Rational::from_int(0),
    )
}

impl GellMannTable {
    pub fn standard() -> Self {
        let z = || ext(0, 0, (0, 1));
        let one = || ext(1, 0, (0, 1));
        let mone = || ext(-1, 0, (0, 1));
        let i = || ext(0, 1, (0, 1));
        let mi = || ext(0, -1, (0, 1));
        let s3 = || ext(0, 0, (1, 3));
        let m2s3 = || ext(0, 0, (-2, 3));
        let lambda = [
            [[z(), one(), z()], [one(), z(), z()], [z(), z(), z()]],
            [[z(), mi(), z()], [i(), z(), z()], [z(), z(), z()]],
            [[one(), z(), z()], [z(), mone(), z()], [z(), z(), z()]],
            [[z(), z(), one()], [z(), z(), z()], [one(), z(), z()]],
            [[z(), z(), mi()], [z(), z(), z()], [i(), z(), z()]],
            [[z(), z(), z()], [z(), z(), one()], [z(), one(), z()]],
            [[z(), z(), z()], [z(), z(), mi()], [z(), i(), z()]],
            // λ⁸ = diag(1, 1, −2)/√3 = diag(√3/3, √3/3, −2√3/3)
            [[s3(), z(), z()], [z(), s3(), z()], [z(), z(), m2s3()]],
        ];
        GellMannTable { lambda }
    }

    /// `λ^a`, `a` in 1..=8.
    pub fn matrix(&self, a: usize) -> Result<&Matrix3> {
        check_index("generator index", a as i64, 1, 8)?;
        Ok(&self.lambda[a - 1])
    }

    /// `(λ^a)_{row,col}` with 1-based indices. Panics on bad indices.
    pub fn entry(&self, a: usize, row: usize, col: usize) -> &ExtScalar {
        &self.lambda[a - 1][row - 1][col - 1]
    }

    /// Overwrites one entry. Used to build negative controls.
    pub fn with_entry(mut self, a: usize, row: usize, col: usize, value: ExtScalar) -> Self {
        self.lambda[a - 1][row - 1][col - 1] = value;
        self
    }

    /// `Q^a` built from this table.
    pub fn generator(&self, a: usize) -> Result<LinearOperator<ExtScalar>> {
        let lam = self.matrix(a)?;
        let half = ExtScalar::from(Rational::new(1, 2).unwrap());
        let mut terms = Vec::new();
        for al in 1..=3 {
            for be in 1..=3 {
                let c = &lam[al - 1][be - 1];
                if c.is_zero() {
                    continue;
                }
                terms.push(su3_generator_weyl::<ExtScalar>(al, be)?.scaled(c.clone() * &half));
            }
        }
        Ok(LinearOperator::sum(terms))
    }

    pub fn generators(&self) -> Vec<LinearOperator<ExtScalar>> {
        (1..=8).map(|a| self.generator(a).unwrap()).collect()
    }
}

/// Totally antisymmetric SU(3) structure constants `f^{abc}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    f: Vec<ExtScalar>,
}

impl StructureConstants {
    pub fn standard() -> Self {
        let half = Rational::new(1, 2).unwrap();
        let r = |v: Rational| ExtScalar::from(v);
        let sqrt3_half = ExtScalar::new(
            Rational::from_int(0),
            Rational::from_int(0),
            half.clone(),
            Rational::from_int(0),
        );
        let base: [((usize, usize, usize), ExtScalar); 9] = [
            ((1, 2, 3), r(Rational::from_int(1))),
            ((1, 4, 7), r(half.clone())),
            ((2, 4, 6), r(half.clone())),
            ((2, 5, 7), r(half.clone())),
            ((3, 4, 5), r(half.clone())),
            ((1, 5, 6), r(-half.clone())),
            ((3, 6, 7), r(-half.clone())),
            ((4, 5, 8), sqrt3_half.clone()),
            ((6, 7, 8), sqrt3_half),
        ];
        let mut f = vec![ExtScalar::default(); 512];
        for ((a, b, c), v) in base {
            let perms = [
                ((a, b, c), false),
                ((b, c, a), false),
                ((c, a, b), false),
                ((b, a, c), true),
                ((a, c, b), true),
                ((c, b, a), true),
            ];
            for ((x, y, z), odd) in perms {
                f[Self::slot(x, y, z)] = if odd { -v.clone() } else { v.clone() };
            }
        }
        StructureConstants { f }
    }

    fn slot(a: usize, b: usize, c: usize) -> usize {
        ((a - 1) * 8 + (b - 1)) * 8 + (c - 1)
    }

    /// `f^{abc}` with indices in 1..=8.
    pub fn get(&self, a: usize, b: usize, c: usize) -> Result<&ExtScalar> {
        for v in [a, b, c] {
            check_index("generator index", v as i64, 1, 8)?;
        }
        Ok(&self.f[Self::slot(a, b, c)])
    }
}

/// `Q^a` in the Gell-Mann basis.
pub fn su3_generator_gellmann(a: usize) -> Result<LinearOperator<ExtScalar>> {
    GellMannTable::standard().generator(a)
}

/// `E^α_β = a†^α a_β − b†_β b^α`.
pub fn su3_generator_weyl<S: Scalar>(alpha: usize, beta: usize) -> Result<LinearOperator<S>> {
    check_index("alpha", alpha as i64, 1, 3)?;
    check_index("beta", beta as i64, 1, 3)?;
    let a_part = LinearOperator::create(Mode::a(alpha)) * LinearOperator::annihilate(Mode::a(beta));
    let b_part = LinearOperator::create(Mode::b(beta)) * LinearOperator::annihilate(Mode::b(alpha));
    Ok(a_part - b_part)
}

/// The commutators `[Q^a, a†^α] = ½ a†^β λ^a_{βα}` and
/// `[Q^a, b†_α] = −½ λ^a_{αβ} b†_β` for all `a`, `α`, on every test vector.
///
/// The right-hand sides always use the standard table, so `generators`
/// built from a corrupted table are caught.
pub fn verify_covariance(
    generators: &[LinearOperator<ExtScalar>],
    testset: &[StateVector<ExtScalar>],
) -> Vec<CheckRecord> {
    let table = GellMannTable::standard();
    let half = ExtScalar::from(Rational::new(1, 2).unwrap());
    let mut out = Vec::with_capacity(48);
    for (ai, q) in generators.iter().enumerate() {
        let a = ai + 1;
        for al in 1..=3 {
            let ad = LinearOperator::create(Mode::a(al));
            let lhs = commutator(q, &ad);
            let rhs = LinearOperator::sum((1..=3).map(|be| {
                LinearOperator::create(Mode::a(be)).scaled(table.entry(a, be, al).clone() * &half)
            }));
            out.push(CheckRecord::from_outcome(
                format!("covariance/a/Q{a}/{al}"),
                json!({"a": a, "alpha": al, "species": "a", "vectors": testset.len()}),
                first_mismatch(testset, |s| lhs.apply(s), |s| rhs.apply(s)),
            ));

            let bd = LinearOperator::create(Mode::b(al));
            let lhs = commutator(q, &bd);
            let rhs = LinearOperator::sum((1..=3).map(|be| {
                LinearOperator::create(Mode::b(be))
                    .scaled(-(table.entry(a, al, be).clone() * &half))
            }));
            out.push(CheckRecord::from_outcome(
                format!("covariance/b/Q{a}/{al}"),
                json!({"a": a, "alpha": al, "species": "b", "vectors": testset.len()}),
                first_mismatch(testset, |s| lhs.apply(s), |s| rhs.apply(s)),
            ));
        }
    }
    out
}

/// `[Q^a, Q^b] = i f^{abc} Q^c` for the 28 pairs `a < b` over ℚ(i,√3), and
/// `[E^α_β, E^γ_δ] = δ^γ_β E^α_δ − δ^α_δ E^γ_β` over ℚ.
pub fn verify_lie_closure(
    ext_testset: &[StateVector<ExtScalar>],
    rational_testset: &[StateVector<Rational>],
) -> Vec<CheckRecord> {
    let qs = GellMannTable::standard().generators();
    let f = StructureConstants::standard();
    let i = ExtScalar::i();
    let mut out = Vec::new();
    for a in 1..=8 {
        for b in (a + 1)..=8 {
            let lhs = commutator(&qs[a - 1], &qs[b - 1]);
            let rhs = LinearOperator::sum((1..=8).filter_map(|c| {
                let fabc = f.get(a, b, c).unwrap();
                (!fabc.is_zero()).then(|| qs[c - 1].scaled(i.clone() * fabc))
            }));
            out.push(CheckRecord::from_outcome(
                format!("closure/gellmann/{a}-{b}"),
                json!({"a": a, "b": b, "vectors": ext_testset.len()}),
                first_mismatch(ext_testset, |s| lhs.apply(s), |s| rhs.apply(s)),
            ));
        }
    }

    let e = |x: usize, y: usize| su3_generator_weyl::<Rational>(x, y).unwrap();
    for al in 1..=3 {
        for be in 1..=3 {
            for ga in 1..=3 {
                for de in 1..=3 {
                    let lhs = commutator(&e(al, be), &e(ga, de));
                    let mut rhs = Vec::new();
                    if ga == be {
                        rhs.push(e(al, de));
                    }
                    if al == de {
                        rhs.push(-e(ga, be));
                    }
                    let rhs = LinearOperator::sum(rhs);
                    out.push(CheckRecord::from_outcome(
                        format!("closure/weyl/{al}{be}-{ga}{de}"),
                        json!({"alpha": al, "beta": be, "gamma": ga, "delta": de,
                               "vectors": rational_testset.len()}),
                        first_mismatch(rational_testset, |s| lhs.apply(s), |s| rhs.apply(s)),
                    ));
                }
            }
        }
    }
    out
}

/// `[Q^a, N_a] = 0` and `[Q^a, N_b] = 0`.
pub fn verify_casimirs(testset: &[StateVector<ExtScalar>]) -> Vec<CheckRecord> {
    let qs = GellMannTable::standard().generators();
    let mut out = Vec::new();
    for (ai, q) in qs.iter().enumerate() {
        for (name, n) in [("N_a", number_a()), ("N_b", number_b())] {
            let c = commutator(q, &n);
            out.push(CheckRecord::from_outcome(
                format!("casimir/Q{}/{name}", ai + 1),
                json!({"a": ai + 1, "casimir": name, "vectors": testset.len()}),
                first_mismatch(testset, |s| c.apply(s), |_| StateVector::zero()),
            ));
        }
    }
    out
}

/// `[Q^a, k₊] = 0` and `[Q^a, k₋] = 0`.
pub fn verify_sp2r_invariance(testset: &[StateVector<ExtScalar>]) -> Vec<CheckRecord> {
    let qs = GellMannTable::standard().generators();
    let mut out = Vec::new();
    for (ai, q) in qs.iter().enumerate() {
        for (name, k) in [("k+", k_plus()), ("k-", k_minus())] {
            let c = commutator(q, &k);
            out.push(CheckRecord::from_outcome(
                format!("sp2r-invariance/Q{}/{name}", ai + 1),
                json!({"a": ai + 1, "op": name, "vectors": testset.len()}),
                first_mismatch(testset, |s| c.apply(s), |_| StateVector::zero()),
            ));
        }
    }
    out
}

/// Each `Q^a` equals `½ Σ λ^a_{αβ} E^α_β` assembled directly from the
/// Weyl operators over ℚ and lifted to ℚ(i,√3) coefficient by coefficient.
pub fn verify_weyl_gellmann_agreement(testset: &[StateVector<ExtScalar>]) -> Vec<CheckRecord> {
    let table = GellMannTable::standard();
    let mut out = Vec::new();
    for a in 1..=8 {
        let q = table.generator(a).unwrap();
        let lam = table.matrix(a).unwrap().clone();
        let combo = |s: &StateVector<ExtScalar>| {
            let mut acc = StateVector::zero();
            for al in 1..=3 {
                for be in 1..=3 {
                    let c = &lam[al - 1][be - 1];
                    if c.is_zero() {
                        continue;
                    }
                    // Apply E over ℚ to each ℚ-component of s, then recombine.
                    let e = su3_generator_weyl::<Rational>(al, be).unwrap();
                    let image = apply_componentwise(&e, s);
                    acc.add_assign(
                        &image.scale(&(c.clone() * &ExtScalar::from(Rational::new(1, 2).unwrap()))),
                    );
                }
            }
            acc
        };
        out.push(CheckRecord::from_outcome(
            format!("weyl-gellmann/Q{a}"),
            json!({"a": a, "vectors": testset.len()}),
            first_mismatch(testset, |s| q.apply(s), combo),
        ));
    }
    out
}

/// Applies a ℚ-operator to an ℚ(i,√3)-vector by splitting it into its four
/// rational component vectors.
fn apply_componentwise(
    op: &LinearOperator<Rational>,
    s: &StateVector<ExtScalar>,
) -> StateVector<ExtScalar> {
    let basis = [
        ExtScalar::from_int(1),
        ExtScalar::i(),
        ExtScalar::sqrt3(),
        ExtScalar::i() * ExtScalar::sqrt3(),
    ];
    let mut acc = StateVector::zero();
    for (k, unit) in basis.iter().enumerate() {
        let part: StateVector<Rational> =
            StateVector::from_terms(s.iter().map(|(m, c)| (*m, c.components()[k].clone())));
        let image = op.apply(&part).map_scalar(ExtScalar::from_rational);
        acc.add_assign(&image.scale(unit));
    }
    acc
}
