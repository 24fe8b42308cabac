use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigRational, Signed, Zero};

use super::{basis_poly, grothendieck, BasisKind, Exponent, TruncPoly};
use crate::error::PolyError;
use crate::tableau::StrictPartition;

/// Result of the K-theoretic Q-cancellation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QCancellation {
    Pass,
    /// A surviving term `coeff · t^a x_3^b …`, exponents listed as
    /// `[a, b, …]`.
    Witness { exponent: Exponent, coeff: BigRational },
}

/// Substitutes `x_1 = t`, `x_2 = −t/(1+t)` into a symmetric `f` and checks
/// that no term involving `t` survives through the truncation degree.
///
/// A monomial `x_1^a x_2^b` only produces powers `t^k` with `k ≥ a + b`, so
/// the truncated input determines the truncated output.
pub fn q_cancellation_check(f: &TruncPoly) -> Result<QCancellation, PolyError> {
    if let Some(i) = f.first_asymmetry() {
        return Err(PolyError::NotSymmetric(i, i + 1));
    }
    let n = f.n();
    if n < 2 {
        return Err(PolyError::TooFewVariables { n, degree: 2 });
    }
    let degree = f.degree_bound();
    let mut out = TruncPoly::zero(n - 1, degree);
    for (e, c) in f.terms() {
        let (a, b) = (e[0] as usize, e[1] as usize);
        let rest: usize = e[2..].iter().map(|&x| x as usize).sum();
        // (−t/(1+t))^b = (−1)^b t^b Σ_k (−1)^k C(b+k−1, k) t^k
        let mut binom = BigRational::from_integer(1.into());
        let mut k = 0;
        while a + b + k + rest <= degree {
            let sign = if (b + k) % 2 == 0 { 1 } else { -1 };
            let mut exp = vec![(a + b + k) as u32];
            exp.extend_from_slice(&e[2..]);
            out.add_term(exp, c * &binom * BigRational::from_integer(sign.into()));
            if b == 0 {
                break;
            }
            binom = binom * BigRational::from_integer((b + k).into()) / BigRational::from_integer((k + 1).into());
            k += 1;
        }
    }
    Ok(match out.terms().into_iter().find(|(e, _)| e[0] > 0) {
        None => QCancellation::Pass,
        Some((e, c)) => QCancellation::Witness { exponent: e.clone(), coeff: c.clone() },
    })
}

/// Coefficients in a basis indexed by partitions, plus what is left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub coeffs: BTreeMap<Vec<u32>, BigRational>,
    /// Homogeneous parts that were not in the span of the leading terms.
    pub residual: TruncPoly,
}

impl Expansion {
    pub fn coeff(&self, parts: &[u32]) -> BigRational {
        self.coeffs.get(parts).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (nu, c) in &self.coeffs {
            let parts: Vec<String> = nu.iter().map(u32::to_string).collect();
            writeln!(f, "({})\t{c}", parts.join(","))?;
        }
        write!(f, "residual\t{}", self.residual)
    }
}

fn as_exponent(parts: &[u32], n: usize) -> Exponent {
    let mut e = parts.to_vec();
    e.resize(n, 0);
    e
}

/// Expands `f` degree by degree in a basis `B_ν` whose lowest part `L_ν`
/// has leading monomial `x^ν` with coefficient one and otherwise only
/// monomials below `ν` in dominance order. `index(d)` lists the `ν` of size
/// `d` in decreasing lexicographic order.
fn triangular_expand(
    f: &TruncPoly,
    index: impl Fn(usize) -> Vec<Vec<u32>>,
    lowest: impl Fn(&[u32]) -> TruncPoly,
    full: impl Fn(&[u32]) -> TruncPoly,
) -> Expansion {
    let (n, degree) = (f.n(), f.degree_bound());
    let mut rem = f.clone();
    let mut coeffs = BTreeMap::new();
    let mut residual = TruncPoly::zero(n, degree);
    let start = f.min_degree().unwrap_or(degree + 1);
    for d in start..=degree {
        let mut part = rem.homogeneous_part(d);
        for nu in index(d) {
            let c = part.coeff(&as_exponent(&nu, n));
            if c.is_zero() {
                continue;
            }
            part = &part - &lowest(&nu).scale(&c);
            rem = &rem - &full(&nu).scale(&c);
            coeffs.insert(nu, c);
        }
        debug_assert_eq!(rem.homogeneous_part(d), part);
        residual = &residual + &part;
        rem = &rem - &part;
    }
    Expansion { coeffs, residual }
}

fn require_variables(f: &TruncPoly) -> Result<(), PolyError> {
    if f.n() < f.degree_bound() {
        return Err(PolyError::TooFewVariables { n: f.n(), degree: f.degree_bound() });
    }
    Ok(())
}

/// Expands `f` in the `GP_ν`, lowest degree first: each homogeneous part
/// is solved in the Schur `P_ν` basis and the matching `GP_ν` truncations
/// are subtracted. Needs `n ≥` the truncation degree.
pub fn gp_expand(f: &TruncPoly) -> Result<Expansion, PolyError> {
    require_variables(f)?;
    let (n, degree) = (f.n(), f.degree_bound());
    let shape = |nu: &[u32]| StrictPartition::new(nu.to_vec()).expect("strict");
    Ok(triangular_expand(
        f,
        |d| StrictPartition::all_of_size(d).into_iter().map(|p| p.parts().to_vec()).collect(),
        |nu| basis_poly(BasisKind::P, &shape(nu), n, degree),
        |nu| basis_poly(BasisKind::GP, &shape(nu), n, degree),
    ))
}

/// Partitions of `d` in decreasing lexicographic order.
pub fn partitions(d: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d as u32, d as u32, &mut Vec::new(), &mut out);
    out
}

/// Expands `f` in the symmetric Grothendieck functions `G_ν`, using the
/// Schur functions as lowest terms. Needs `n ≥` the truncation degree.
pub fn g_expand(f: &TruncPoly) -> Result<Expansion, PolyError> {
    require_variables(f)?;
    let (n, degree) = (f.n(), f.degree_bound());
    Ok(triangular_expand(
        f,
        partitions,
        |nu| grothendieck(nu, n, degree).homogeneous_part(nu.iter().sum::<u32>() as usize),
        |nu| grothendieck(nu, n, degree),
    ))
}

/// Outcome of comparing `Σ_λ` with `GP_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IkedaOutcome {
    Pass,
    /// The first monomial (graded order) where the two sums differ.
    Differs { exponent: Exponent, sigma: BigRational, gp: BigRational },
}

/// Compares `Σ_λ` and `GP_λ` coefficientwise in `n` variables through
/// total degree `degree`.
pub fn check_ikeda(shape: &StrictPartition, n: usize, degree: usize) -> IkedaOutcome {
    let sigma = basis_poly(BasisKind::Sigma, shape, n, degree);
    let gp = basis_poly(BasisKind::GP, shape, n, degree);
    let diff = &sigma - &gp;
    match diff.terms().first() {
        None => IkedaOutcome::Pass,
        Some((e, _)) => IkedaOutcome::Differs { exponent: (*e).clone(), sigma: sigma.coeff(e), gp: gp.coeff(e) },
    }
}

/// Expands `B_λ · B_μ` for `B = G` or `GP`. Shapes are partitions (strict
/// for `GP`); the empty partition stands for `1`.
pub fn product_expand(kind: BasisKind, lhs: &[u32], rhs: &[u32], n: usize, degree: usize) -> Result<Expansion, PolyError> {
    let factor = |parts: &[u32]| -> Result<TruncPoly, PolyError> {
        match kind {
            BasisKind::G => Ok(grothendieck(parts, n, degree)),
            BasisKind::GP => {
                let shape = StrictPartition::new(parts.to_vec()).map_err(|e| PolyError::Mismatch(e.to_string()))?;
                Ok(basis_poly(BasisKind::GP, &shape, n, degree))
            }
            other => Err(PolyError::Mismatch(format!("products are expanded only for G and GP, not {other}"))),
        }
    };
    let product = &factor(lhs)? * &factor(rhs)?;
    match kind {
        BasisKind::G => g_expand(&product),
        _ => gp_expand(&product),
    }
}

/// Sum of `c_ν · GP_ν` for the given coefficients.
pub fn gp_combination(coeffs: &HashMap<StrictPartition, BigRational>, n: usize, degree: usize) -> TruncPoly {
    let mut out = TruncPoly::zero(n, degree);
    for (nu, c) in coeffs {
        out = &out + &basis_poly(BasisKind::GP, nu, n, degree).scale(c);
    }
    out
}

impl fmt::Display for QCancellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QCancellation::Pass => f.write_str("pass"),
            QCancellation::Witness { exponent, coeff } => {
                write!(f, "{} {} t^{}", if coeff.is_negative() { "-" } else { "+" }, coeff.abs(), exponent[0])?;
                for (k, &x) in exponent.iter().enumerate().skip(1) {
                    if x > 0 {
                        write!(f, " x{}^{x}", k + 2)?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn int(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    #[test]
    fn cancellation_examples() {
        let gp1 = basis_poly(BasisKind::GP, &shape("1"), 2, 4);
        assert_eq!(q_cancellation_check(&gp1).unwrap(), QCancellation::Pass);
        let p1 = basis_poly(BasisKind::P, &shape("1"), 2, 3);
        let w = q_cancellation_check(&p1).unwrap();
        assert_eq!(w, QCancellation::Witness { exponent: vec![2], coeff: int(1) });
        assert_eq!(w.to_string(), "+ 1 t^2");
        assert!(q_cancellation_check(&TruncPoly::var(2, 2, 1)).is_err());
    }

    #[test]
    fn expansion_examples() {
        let (n, d) = (4, 4);
        let gp2 = basis_poly(BasisKind::GP, &shape("2"), n, d);
        let e = gp_expand(&gp2).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![2], int(1))]));
        assert!(e.residual.is_zero());

        let gp1 = basis_poly(BasisKind::GP, &shape("1"), n, d);
        let e = gp_expand(&(&gp2 + &gp1)).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![1], int(1)), (vec![2], int(1))]));

        // P_(1) = GP_(1) − x1x2 − … : the degree-2 leftover is −e_2
        let p1 = basis_poly(BasisKind::P, &shape("1"), 2, 2);
        let e = gp_expand(&p1).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![1], int(1))]));
        assert_eq!(e.residual.to_string(), "- 1 x1^1 x2^1");

        assert!(gp_expand(&TruncPoly::zero(2, 3)).is_err());
    }

    #[test]
    fn products() {
        let e = product_expand(BasisKind::GP, &[1], &[1], 4, 4).unwrap();
        assert_eq!(e.coeff(&[2]), int(1));
        assert!(e.residual.is_zero());
        let e = product_expand(BasisKind::GP, &[], &[2, 1], 4, 4).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![2, 1], int(1))]));
        // G_1 · G_1 = G_2 + G_11 + G_21 at β = 1
        let e = product_expand(BasisKind::G, &[1], &[1], 4, 4).unwrap();
        assert!(e.is_integral());
        assert!(e.residual.is_zero());
        assert_eq!(e.coeff(&[2]), int(1));
        assert_eq!(e.coeff(&[1, 1]), int(1));
        assert_eq!(e.coeff(&[2, 1]), int(1));
        assert!(product_expand(BasisKind::P, &[1], &[1], 4, 4).is_err());
    }

    #[test]
    fn partitions_listed() {
        assert_eq!(partitions(4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn ikeda_small() {
        assert_eq!(check_ikeda(&shape("1"), 3, 3), IkedaOutcome::Pass);
        assert_eq!(check_ikeda(&shape("2"), 3, 4), IkedaOutcome::Pass);
    }
}
