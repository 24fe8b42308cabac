use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::PolyError;

/// Exponent vector of length `n`.
pub type Exponent = Vec<u32>;

/// A polynomial in `x_1..x_n` with rational coefficients, truncated above
/// total degree `degree`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPoly {
    n: usize,
    degree: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

fn total(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl TruncPoly {
    pub fn zero(n: usize, degree: usize) -> Self {
        TruncPoly { n, degree, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, degree: usize) -> Self {
        let mut p = Self::zero(n, degree);
        p.add_term(vec![0; n], BigRational::one());
        p
    }

    /// `x_i`, 1-based.
    pub fn var(n: usize, degree: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n, degree);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · x^e`; ignored if `e` is above the truncation.
    pub fn add_term(&mut self, e: Exponent, c: BigRational) {
        assert_eq!(e.len(), self.n, "exponent length");
        if total(&e) > self.degree || c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `x^e` with coefficient one.
    pub fn add_monomial(&mut self, e: &[u32]) {
        self.add_term(e.to_vec(), BigRational::one());
    }

    pub fn coeff(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in graded order: total degree ascending, then exponents
    /// lexicographically descending.
    pub fn terms(&self) -> Vec<(&Exponent, &BigRational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| total(a.0).cmp(&total(b.0)).then_with(|| b.0.cmp(a.0)));
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).min()
    }

    pub fn homogeneous_part(&self, d: usize) -> TruncPoly {
        let terms = self.terms.iter().filter(|(e, _)| total(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        TruncPoly { n: self.n, degree: self.degree, terms }
    }

    /// The same polynomial, truncated further or extended to a larger bound.
    pub fn with_degree(&self, degree: usize) -> TruncPoly {
        let terms = self.terms.iter().filter(|(e, _)| total(e) <= degree).map(|(e, c)| (e.clone(), c.clone())).collect();
        TruncPoly { n: self.n, degree, terms }
    }

    pub fn scale(&self, c: &BigRational) -> TruncPoly {
        if c.is_zero() {
            return Self::zero(self.n, self.degree);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        TruncPoly { n: self.n, degree: self.degree, terms }
    }

    /// Exchanges `x_i` and `x_j`, 1-based.
    pub fn swap_vars(&self, i: usize, j: usize) -> TruncPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, j - 1);
                (e, c.clone())
            })
            .collect();
        TruncPoly { n: self.n, degree: self.degree, terms }
    }

    /// Invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<usize> {
        (1..self.n).find(|&i| self.swap_vars(i, i + 1) != *self)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_compatible(&self, other: &TruncPoly) {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
    }

    /// `{"n", "degree", "terms": {"a,b,c": coeff}}`; integral coefficients
    /// are JSON integers, others strings `"p/q"`.
    pub fn to_json_value(&self) -> Value {
        let mut terms = Map::new();
        for (e, c) in self.terms() {
            let key: Vec<String> = e.iter().map(u32::to_string).collect();
            terms.insert(key.join(","), coeff_json(c));
        }
        serde_json::json!({"n": self.n, "degree": self.degree, "terms": terms})
    }

    /// Reads the format of [`TruncPoly::to_json_value`]. A bare term map is
    /// also accepted, with `n` taken from the keys and the given `degree`.
    pub fn from_json_value(v: &Value, degree: usize) -> Result<TruncPoly, PolyError> {
        let map = match v.get("terms") {
            Some(t) => t.as_object().ok_or_else(|| PolyError::Parse("\"terms\" must be an object".into()))?,
            None => v.as_object().ok_or_else(|| PolyError::Parse("expected a JSON object".into()))?,
        };
        let mut n = v.get("n").and_then(Value::as_u64).map(|x| x as usize);
        let mut parsed = Vec::new();
        for (k, c) in map {
            let e: Exponent = k
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| PolyError::Parse(format!("bad exponent key '{k}'")))?;
            match n {
                None => n = Some(e.len()),
                Some(m) if m != e.len() => {
                    return Err(PolyError::Parse(format!("key '{k}' has {} exponents, expected {m}", e.len())));
                }
                _ => {}
            }
            parsed.push((e, parse_coeff(c)?));
        }
        let mut p = TruncPoly::zero(n.unwrap_or(0), degree);
        for (e, c) in parsed {
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn coeff_json(c: &BigRational) -> Value {
    if c.is_integer() {
        if let Ok(v) = c.to_integer().to_string().parse::<i64>() {
            return Value::from(v);
        }
    }
    Value::from(c.to_string())
}

fn parse_coeff(v: &Value) -> Result<BigRational, PolyError> {
    let s = match v {
        Value::Number(x) if x.is_i64() || x.is_u64() => x.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(PolyError::Parse(format!("bad coefficient {v}"))),
    };
    let bad = || PolyError::Parse(format!("bad coefficient '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{} {}", if c.is_negative() { "-" } else { "+" }, c.abs())?;
            for (k, &x) in e.iter().enumerate() {
                if x > 0 {
                    write!(f, " x{}^{x}", k + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl Add<&TruncPoly> for &TruncPoly {
    type Output = TruncPoly;

    fn add(self, rhs: &TruncPoly) -> TruncPoly {
        self.check_compatible(rhs);
        let mut out = self.with_degree(self.degree.min(rhs.degree));
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;

    fn neg(self) -> TruncPoly {
        self.scale(&-BigRational::one())
    }
}

impl Sub<&TruncPoly> for &TruncPoly {
    type Output = TruncPoly;

    fn sub(self, rhs: &TruncPoly) -> TruncPoly {
        self + &(-rhs)
    }
}

/// Product truncated at the smaller of the two bounds.
impl Mul<&TruncPoly> for &TruncPoly {
    type Output = TruncPoly;

    fn mul(self, rhs: &TruncPoly) -> TruncPoly {
        self.check_compatible(rhs);
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        let degree = self.degree.min(rhs.degree);
        for (a, x) in &self.terms {
            let da = total(a);
            for (b, y) in &rhs.terms {
                if da + total(b) > degree {
                    continue;
                }
                let e: Exponent = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncPoly { n: self.n, degree, terms: acc }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    #[test]
    fn text_format() {
        let x1 = TruncPoly::var(2, 3, 1);
        let x2 = TruncPoly::var(2, 3, 2);
        let p = &(&x1 + &x2) * &(&x1 + &x2);
        assert_eq!(p.to_string(), "+ 1 x1^2 + 2 x1^1 x2^1 + 1 x2^2");
        let q = &(&p - &x1) + &TruncPoly::one(2, 3);
        assert_eq!(q.to_string(), "+ 1 - 1 x1^1 + 1 x1^2 + 2 x1^1 x2^1 + 1 x2^2");
        assert_eq!(TruncPoly::zero(3, 2).to_string(), "0");
        assert_eq!(x1.scale(&BigRational::new(1.into(), 2.into())).to_string(), "+ 1/2 x1^1");
    }

    #[test]
    fn truncation_and_cancellation() {
        let x1 = TruncPoly::var(1, 2, 1);
        let cube = &(&x1 * &x1) * &x1;
        assert!(cube.is_zero());
        let mut p = TruncPoly::zero(1, 2);
        p.add_term(vec![1], int(3));
        p.add_term(vec![1], int(-3));
        assert!(p.is_zero());
    }

    #[test]
    fn symmetry() {
        let x1 = TruncPoly::var(3, 2, 1);
        assert!(!x1.is_symmetric());
        assert!(TruncPoly::zero(3, 2).is_symmetric());
        let e1 = &(&x1 + &TruncPoly::var(3, 2, 2)) + &TruncPoly::var(3, 2, 3);
        assert!(e1.is_symmetric());
    }

    #[test]
    fn json_round_trip() {
        let mut p = TruncPoly::zero(2, 4);
        p.add_term(vec![1, 1], int(2));
        p.add_term(vec![2, 0], BigRational::new((-1).into(), 3.into()));
        let v = p.to_json_value();
        assert_eq!(v["terms"]["1,1"], serde_json::json!(2));
        assert_eq!(v["terms"]["2,0"], serde_json::json!("-1/3"));
        assert_eq!(TruncPoly::from_json_value(&v, 4).unwrap(), p);
        let bare = serde_json::json!({"1,1": 2, "2,0": "-1/3"});
        assert_eq!(TruncPoly::from_json_value(&bare, 4).unwrap(), p);
        assert!(TruncPoly::from_json_value(&serde_json::json!({"1,x": 1}), 4).is_err());
        assert!(TruncPoly::from_json_value(&serde_json::json!({"1": "1/0"}), 4).is_err());
    }
}
