//! Iwasawa invariants of the constant `Z_p`-tower.
//!
//! Instead of the power series `M_X(T) = det(D - A(1+T) - Aᵗ(1+T)⁻¹)` we
//! compute the integer polynomial `P(T) = (1+T)^r M_X(T)`. `(1+T)^r` is a
//! unit of `Z_p[[T]]`, so `P` and `M_X` share `μ` and the degree of the
//! distinguished part, and both can be read off exact coefficient
//! valuations with no precision to manage.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::arith;
use crate::linalg::{charpoly_matrix_determinant, kirchhoff_count, IntPolynomial, PolyMatrix};
use crate::tower::{stabilization_level, tower_component_with_derived, ConstantVoltage, Prime};
use crate::{DirectedMultigraph, Error, Result};

/// Invariants of the constant tower `(X̂_n)_{n ≥ n₀}` over `X`.
///
/// Viewed over the tower's own Iwasawa algebra the module of `X_∞` is
/// `p^{n₀}` copies of the tower's, which gives `mu_total = μ` and
/// `lambda_total = p^{n₀} (λ + 1)`: the `T`-adic `μ` of the characteristic
/// series is not divided by the number of copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IwasawaInvariants {
    pub p: Prime,
    pub n0: u32,
    pub mu: u64,
    pub lambda: u64,
    pub mu_total: u64,
    pub lambda_total: u64,
    pub charpoly: IntPolynomial,
}

/// `μ` and the Weierstrass degree of `P(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weierstrass {
    pub mu_total: u64,
    pub lambda_total: u64,
}

/// `P(T) = det((1+T)D - (1+T)²A - Aᵗ)`, i.e. `(1+T)^r det(D - A(1+T) - Aᵗ(1+T)⁻¹)`.
///
/// `D` holds `d_i(v) + d_o(v)` (a loop counts twice), `A` the adjacency
/// matrix (a loop counts once). Entries have degree at most 2, so the
/// determinant is interpolated from `2r + 1` integer evaluations.
pub fn char_poly(g: &DirectedMultigraph) -> Result<IntPolynomial> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let r = g.vertex_count();
    let degrees = g.degree_profile();
    let a = g.adjacency_matrix();
    let one_plus_t = IntPolynomial::one_plus_t();
    let square = one_plus_t.pow(2);
    let m = PolyMatrix::from_fn(r, r, |i, j| {
        let mut entry = square.scale(&-a[(i, j)].clone());
        entry = &entry - &IntPolynomial::constant(a[(j, i)].clone());
        if i == j {
            entry = &entry + &one_plus_t.scale(&BigInt::from(degrees.total(i)));
        }
        entry
    });
    let poly = charpoly_matrix_determinant(&m, 2 * r).map_err(|e| match e {
        Error::NonIntegralInterpolation | Error::DegreeBoundExceeded { .. } => Error::InternalDegreeViolation,
        other => other,
    })?;
    if poly.degree().is_some_and(|d| d > 2 * r) || !poly.eval(&BigInt::from(0)).eq(&BigInt::from(0)) {
        return Err(Error::InternalDegreeViolation);
    }
    Ok(poly)
}

/// `mu_total = min v_p(c_i)`, `lambda_total` = first index attaining it.
pub fn weierstrass(poly: &IntPolynomial, p: Prime) -> Result<Weierstrass> {
    let vals = poly.coeffs().iter().enumerate().filter_map(|(i, c)| arith::valuation(c, p.get()).map(|v| (i, v)));
    let (lambda_total, mu_total) = vals
        .fold(None, |best: Option<(usize, u32)>, (i, v)| match best {
            Some((_, bv)) if bv <= v => best,
            _ => Some((i, v)),
        })
        .ok_or(Error::ZeroPolynomial)?;
    Ok(Weierstrass { mu_total: u64::from(mu_total), lambda_total: lambda_total as u64 })
}

pub fn invariants(g: &DirectedMultigraph, p: Prime) -> Result<IwasawaInvariants> {
    let profile = g.cycle_weight_profile()?;
    let n0 = stabilization_level(profile, p).map_err(Error::NoTowerExists)?;
    let charpoly = char_poly(g)?;
    let Weierstrass { mu_total, lambda_total } = weierstrass(&charpoly, p)?;
    let sheets = p.pow(n0)?;
    if lambda_total % sheets != 0 {
        return Err(Error::StructureViolation("p^n0 does not divide the Weierstrass degree"));
    }
    if lambda_total < sheets {
        return Err(Error::StructureViolation("T does not divide the characteristic series"));
    }
    Ok(IwasawaInvariants {
        p,
        n0,
        mu: mu_total,
        lambda: lambda_total / sheets - 1,
        mu_total,
        lambda_total,
        charpoly,
    })
}

/// One level of the tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRecord {
    pub n: u32,
    /// Components of the full derived graph at this level.
    pub component_count: u64,
    /// Spanning trees of one component `X̂_n`.
    pub kappa_per_component: BigUint,
    pub ord_p: u32,
    /// `μ p^m + λ m + ν` with `m = n - n₀`, once `ν` is fitted.
    pub predicted_ord_p: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerReport {
    pub p: Prime,
    pub n0: u32,
    pub mu: u64,
    pub lambda: u64,
    pub levels: Vec<LevelRecord>,
    pub fitted_nu: Option<i64>,
    /// Least level from which the growth law holds at every recorded level.
    pub exact_from_level: Option<u32>,
}

/// `(μ, λ, ν)` solved from `ord_p(κ_n)` at three consecutive levels alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthFit {
    pub mu: i64,
    pub lambda: i64,
    pub nu: i64,
}

impl TowerReport {
    /// Solves `ord = μ p^m + λ m + ν` from the top three recorded levels,
    /// without using the characteristic polynomial. `None` if fewer than
    /// three levels are recorded or the system has no integer solution.
    pub fn fit_top_levels(&self) -> Option<GrowthFit> {
        let [a, b, c] = self.levels.get(self.levels.len().checked_sub(3)?..)? else { return None };
        if b.n != a.n + 1 || c.n != b.n + 1 {
            return None;
        }
        let p = i128::from(self.p.get());
        let m = i128::from(a.n - self.n0);
        let (o1, o2, o3) = (i128::from(a.ord_p), i128::from(b.ord_p), i128::from(c.ord_p));
        let pm = p.checked_pow(u32::try_from(m).ok()?)?;
        // second difference is μ p^m (p-1)^2, first difference μ p^m (p-1) + λ
        let denom = pm * (p - 1) * (p - 1);
        let second = o3 - 2 * o2 + o1;
        if second % denom != 0 {
            return None;
        }
        let mu = second / denom;
        let lambda = (o2 - o1) - mu * pm * (p - 1);
        let nu = o1 - mu * pm - lambda * m;
        Some(GrowthFit { mu: mu as i64, lambda: lambda as i64, nu: nu as i64 })
    }
}

fn growth_prediction(mu: u64, lambda: u64, p: Prime, m: u32) -> Result<i64> {
    let pm = i64::try_from(p.pow(m)?).map_err(|_| Error::Overflow)?;
    let mu = i64::try_from(mu).map_err(|_| Error::Overflow)?;
    let lambda = i64::try_from(lambda).map_err(|_| Error::Overflow)?;
    mu.checked_mul(pm)
        .and_then(|x| x.checked_add(lambda.checked_mul(i64::from(m))?))
        .ok_or(Error::Overflow)
}

fn level_record(g: &DirectedMultigraph, voltage: &ConstantVoltage, n: u32) -> Result<LevelRecord> {
    let (component, derived) = tower_component_with_derived(g, voltage, n)?;
    let kappa = kirchhoff_count(&component.graph)?;
    let ord_p = arith::valuation_biguint(&kappa, voltage.p().get()).ok_or(Error::StructureViolation("zero spanning trees"))?;
    Ok(LevelRecord {
        n,
        component_count: derived.graph().component_count()? as u64,
        kappa_per_component: kappa,
        ord_p,
        predicted_ord_p: None,
    })
}

#[cfg(feature = "parallel")]
fn level_records(g: &DirectedMultigraph, voltage: &ConstantVoltage, levels: core::ops::RangeInclusive<u32>) -> Result<Vec<LevelRecord>> {
    use rayon::prelude::*;
    levels.into_par_iter().map(|n| level_record(g, voltage, n)).collect()
}

#[cfg(not(feature = "parallel"))]
fn level_records(g: &DirectedMultigraph, voltage: &ConstantVoltage, levels: core::ops::RangeInclusive<u32>) -> Result<Vec<LevelRecord>> {
    levels.map(|n| level_record(g, voltage, n)).collect()
}

/// Builds `X̂_n` for `n₀ ≤ n ≤ n_max`, counts its spanning trees, fits `ν`
/// at `n_max` from the Weierstrass `μ, λ`, and reports where the growth law
/// starts to hold exactly.
///
/// The fit makes level `n_max` agree by construction, so exactness is only
/// claimed when at least `n_max - 1` agrees as well; otherwise
/// `exact_from_level` is `None`.
pub fn verify_growth(g: &DirectedMultigraph, p: Prime, n_max: u32) -> Result<TowerReport> {
    let inv = invariants(g, p)?;
    verify_growth_with(g, &inv, n_max)
}

/// [`verify_growth`] reusing already computed invariants.
pub fn verify_growth_with(g: &DirectedMultigraph, inv: &IwasawaInvariants, n_max: u32) -> Result<TowerReport> {
    let p = inv.p;
    if n_max < inv.n0 + 2 {
        return Err(Error::InvalidSpec("n_max must be at least n0 + 2"));
    }
    let voltage = ConstantVoltage::unit(p);
    let mut levels = level_records(g, &voltage, inv.n0..=n_max)?;
    let m_max = n_max - inv.n0;
    let top = i64::from(levels.last().map_or(0, |l| l.ord_p));
    let nu = top - growth_prediction(inv.mu, inv.lambda, p, m_max)?;
    for rec in &mut levels {
        rec.predicted_ord_p = Some(growth_prediction(inv.mu, inv.lambda, p, rec.n - inv.n0)? + nu);
    }
    let holds = |rec: &LevelRecord| rec.predicted_ord_p == Some(i64::from(rec.ord_p));
    let agreeing = levels.iter().rev().take_while(|r| holds(r)).count();
    let exact_from_level = (agreeing >= 2).then(|| levels[levels.len() - agreeing].n);
    Ok(TowerReport { p, n0: inv.n0, mu: inv.mu, lambda: inv.lambda, levels, fitted_nu: Some(nu), exact_from_level })
}

/// Which of the sufficient conditions for `μ > 0`, `μ = 0`, and
/// `(μ, λ) = (0, 1)` a graph meets for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremHypotheses {
    /// `p` divides every in-degree and out-degree.
    pub mu_positive_hyp: bool,
    /// Constant total degree `k` with `p ∤ k`, and `A` normal.
    pub mu_zero_hyp: bool,
    /// Balanced, `p > 2` or some cycle weight prime to `p`, and `p ∤ k κ_X`
    /// where `k = Σ d_i(v)`.
    pub balanced_hyp: bool,
}

pub fn check_theorem_hypotheses(g: &DirectedMultigraph, p: Prime) -> Result<TheoremHypotheses> {
    if !g.is_connected()? {
        return Err(Error::NotConnected);
    }
    let deg = g.degree_profile();
    let divides = |d: &usize| p.divides(*d as u64);
    let mu_positive_hyp = deg.in_deg.iter().all(divides) && deg.out_deg.iter().all(divides);
    let mu_zero_hyp = g.constant_total_degree().is_some_and(|k| !p.divides(k as u64)) && g.is_adjacency_normal();
    let balanced_hyp = g.is_balanced() && {
        let coprime_cycle = g
            .cycle_weight_profile()?
            .weight_gcd()
            .is_some_and(|w| w != 0 && !p.divides(w));
        let k = BigUint::from(g.edge_count());
        let kappa = kirchhoff_count(g)?;
        (p.get() > 2 || coprime_cycle) && arith::valuation_biguint(&(k * kappa), p.get()) == Some(0)
    };
    Ok(TheoremHypotheses { mu_positive_hyp, mu_zero_hyp, balanced_hyp })
}
