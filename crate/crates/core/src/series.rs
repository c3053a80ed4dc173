//! Exact truncated univariate power series, Bernoulli numbers, and the
//! specific series used by the obstruction pipeline.
//!
//! A `TruncatedSeries` stores coefficients for exponents `0..=order` of a
//! single formal variable. Binary operations truncate to the minimum order of
//! the operands; coefficients beyond the order are never reported.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::scalar::{binomial, format_rational, parse_rational, rat_int, Rational};

/// Univariate power series known exactly through `z^order`.
///
/// `exact` marks a series that is a genuine polynomial (all higher
/// coefficients are zero, not merely unknown). It is not serialized; the
/// wire format is `{"var", "order", "coeffs"}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: String,
    order: usize,
    coeffs: Vec<Rational>,
    exact: bool,
}

impl TruncatedSeries {
    pub fn zero(var: &str, order: usize) -> Self {
        TruncatedSeries {
            var: var.to_string(),
            order,
            coeffs: vec![Rational::zero(); order + 1],
            exact: false,
        }
    }

    pub fn one(var: &str, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `c * var^k`, truncated at `order`.
    pub fn monomial(var: &str, order: usize, k: usize, c: Rational) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(var: &str, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least its constant term");
        TruncatedSeries {
            var: var.to_string(),
            order: coeffs.len() - 1,
            coeffs,
            exact: false,
        }
    }

    /// Marks the series as an exact polynomial (see `substitute`).
    pub fn into_polynomial(mut self) -> Self {
        self.exact = true;
        self
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_polynomial(&self) -> bool {
        self.exact
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: Rational) {
        if k <= self.order {
            self.coeffs[k] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when some non-constant coefficient is nonzero; this is the
    /// "nonzero in Q[[s]]/Q1" test.
    pub fn is_nonzero_mod_constants(&self) -> bool {
        self.coeffs.iter().skip(1).any(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            var: self.var.clone(),
            order,
            coeffs: self.coeffs[..=order].to_vec(),
            exact: false,
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), Error> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var.clone(), other.var.clone()));
        }
        Ok(())
    }

    /// Sum, truncated to the minimum of the two orders.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_var(other)?;
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Ok(TruncatedSeries {
            var: self.var.clone(),
            order,
            coeffs,
            exact: self.exact && other.exact,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            var: self.var.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            exact: self.exact,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            var: self.var.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            exact: self.exact,
        }
    }

    /// Product, truncated to the minimum of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_var(other)?;
        let order = self.order.min(other.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries {
            var: self.var.clone(),
            order,
            coeffs,
            exact: self.exact && other.exact,
        })
    }

    /// Substitutes `inner` for the variable of `self`. The result lives in
    /// the variable of `inner` with the order of `inner`.
    ///
    /// If `inner` has a nonzero constant term, `self` must be an exact
    /// polynomial; otherwise the constant term of the result would depend on
    /// unknown coefficients of `self`.
    pub fn substitute(&self, inner: &Self) -> Result<Self, Error> {
        if !inner.coeff(0).is_zero() && !self.exact {
            return Err(Error::SubstitutionConstantTerm);
        }
        let order = inner.order;
        let mut acc = TruncatedSeries::zero(&inner.var, order);
        let mut power = TruncatedSeries::one(&inner.var, order);
        for k in 0..=self.order {
            let c = self.coeff(k);
            if !c.is_zero() {
                acc = acc.add(&power.scale(&c))?;
            }
            if k < self.order {
                power = power.mul(inner)?;
                // Once every power is zero the remaining terms cannot
                // contribute below the truncation order.
                if power.is_zero() && inner.coeff(0).is_zero() {
                    break;
                }
            }
        }
        Ok(acc)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("TruncatedSeries", 3)?;
        st.serialize_field("var", &self.var)?;
        st.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            var: String,
            order: usize,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(de)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(serde::de::Error::custom("coeffs length must be order + 1"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(TruncatedSeries {
            var: raw.var,
            order: raw.order,
            coeffs,
            exact: false,
        })
    }
}

/// Bernoulli number `B_n` in the convention with `B_1 = -1/2`, which is the
/// one reproducing the displayed coefficients of `s(z)`.
///
/// Uses the defining recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
        }
        let denom = Rational::from_integer(BigInt::from(m as u64 + 1));
        b.push(-acc / denom);
    }
    b.pop().unwrap()
}

/// Factorial as a rational, for series denominators.
fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// The series `s(z) = 1/(e^{-z} - 1) + 1/z`, whose expansion is
/// `-1/2 - z/12 + z^3/720 - z^5/30240 + ...`: the constant term is `-1/2`,
/// the coefficient of `z^{2k-1}` is `-B_{2k}/(2k)!`, and all other even
/// coefficients vanish.
pub fn s_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero("z", order);
    s.set_coeff(0, crate::scalar::rat(-1, 2));
    let mut k = 1usize;
    while 2 * k - 1 <= order {
        let coeff = -bernoulli(2 * k) / factorial(2 * k);
        s.set_coeff(2 * k - 1, coeff);
        k += 1;
    }
    s
}

/// The series `h(x) = sum_n (-1)^n/(n+2) (x-1)^n` in the variable `x-1`.
pub fn h_series(order: usize) -> TruncatedSeries {
    let mut h = TruncatedSeries::zero("x-1", order);
    for n in 0..=order {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        h.set_coeff(n, crate::scalar::rat(sign, (n + 2) as i64));
    }
    h
}

/// The polynomial
/// `f_n(x) = sum_{k=0}^n C(n,k) (-1)^{n-k} sum_{j=0}^{k-1} (k-j) x^j`,
/// evaluated from its defining double sum.
pub fn f_n_polynomial(n: usize) -> TruncatedSeries {
    assert!(n >= 1, "f_n is defined for n >= 1");
    let mut f = TruncatedSeries::zero("x", n.max(1));
    for k in 0..=n {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_integer(binomial(n as u64, k as u64) * BigInt::from(sign));
        for j in 0..k {
            let term = &c * rat_int((k - j) as i64);
            let cur = f.coeff(j);
            f.set_coeff(j, cur + term);
        }
    }
    f.into_polynomial()
}

/// Closed form of the same polynomial: `f_1 = 1` and `f_n = x(x-1)^{n-2}`.
pub fn f_n_closed_form(n: usize) -> TruncatedSeries {
    assert!(n >= 1);
    if n == 1 {
        return TruncatedSeries::one("x", 1).into_polynomial();
    }
    let x = TruncatedSeries::monomial("x", n.max(1), 1, Rational::one()).into_polynomial();
    let x_minus_1 = x
        .add(&TruncatedSeries::one("x", n.max(1)).neg())
        .unwrap()
        .into_polynomial();
    let mut acc = x;
    for _ in 0..n - 2 {
        acc = acc.mul(&x_minus_1).unwrap();
    }
    acc.into_polynomial()
}

/// Left-hand side of the companion identity
/// `sum_k C(n,k) (-1)^{n-k} (x^k - 1)/(x - 1)`, expanded as a polynomial.
pub fn geometric_sum_identity_lhs(n: usize) -> TruncatedSeries {
    assert!(n >= 1);
    let mut f = TruncatedSeries::zero("x", n.max(1));
    for k in 0..=n {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_integer(binomial(n as u64, k as u64) * BigInt::from(sign));
        for j in 0..k {
            let cur = f.coeff(j);
            f.set_coeff(j, cur + c.clone());
        }
    }
    f.into_polynomial()
}

/// `(x-1)^{n-1}` as a polynomial, the right-hand side of the same identity.
pub fn geometric_sum_identity_rhs(n: usize) -> TruncatedSeries {
    assert!(n >= 1);
    let one = TruncatedSeries::one("x", n.max(1)).into_polynomial();
    let x_minus_1 = TruncatedSeries::monomial("x", n.max(1), 1, Rational::one())
        .add(&one.neg())
        .unwrap()
        .into_polynomial();
    let mut acc = one;
    for _ in 0..n - 1 {
        acc = acc.mul(&x_minus_1).unwrap();
    }
    acc.into_polynomial()
}

/// The obstruction series: `t + (t^2 - 1) h(t)` after `t = 1 + s`, expanded
/// in `s`. Its expansion starts `1 + 2s - s^2/6 + ...`.
pub fn obstruction_series(order: usize) -> TruncatedSeries {
    let s = TruncatedSeries::monomial("s", order, 1, Rational::one());
    let one = TruncatedSeries::one("s", order);
    let t = one.add(&s).unwrap();
    // h is a series in (x - 1), and t - 1 = s has zero constant term.
    let h_at_t = h_series(order).substitute(&s).unwrap();
    let t2_minus_1 = t.mul(&t).unwrap().sub(&one).unwrap();
    t.add(&t2_minus_1.mul(&h_at_t).unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    /// Independent Bernoulli oracle: the explicit double sum
    /// `B_n = sum_{k=0}^n 1/(k+1) sum_{j=0}^k (-1)^j C(k,j) j^n`.
    fn bernoulli_oracle(n: usize) -> Rational {
        let mut acc = Rational::zero();
        for k in 0..=n {
            let mut inner = Rational::zero();
            for j in 0..=k {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let jn = if n == 0 {
                    BigInt::one()
                } else {
                    BigInt::from(j).pow(n as u32)
                };
                inner += Rational::from_integer(
                    BigInt::from(sign) * binomial(k as u64, j as u64) * jn,
                );
            }
            acc += inner / rat_int(k as i64 + 1);
        }
        acc
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
    }

    #[test]
    fn bernoulli_matches_double_sum_oracle() {
        for n in 0..=24 {
            assert_eq!(bernoulli(n), bernoulli_oracle(n), "B_{n} mismatch");
        }
    }

    #[test]
    fn s_series_displayed_coefficients() {
        let s = s_series(5);
        let want = [
            rat(-1, 2),
            rat(-1, 12),
            rat(0, 1),
            rat(1, 720),
            rat(0, 1),
            rat(-1, 30240),
        ];
        assert_eq!(s.coeffs(), &want);
        assert_eq!(s_series(0).coeffs(), &[rat(-1, 2)]);
    }

    #[test]
    fn s_series_parity() {
        let s = s_series(12);
        for k in 1..=6 {
            assert_eq!(s.coeff(2 * k - 1), -bernoulli(2 * k) / factorial(2 * k));
            assert!(s.coeff(2 * k).is_zero(), "even coefficient {} nonzero", 2 * k);
        }
    }

    #[test]
    fn h_series_first_coefficients() {
        let h = h_series(2);
        assert_eq!(h.coeff(0), rat(1, 2));
        assert_eq!(h.coeff(1), rat(-1, 3));
        assert_eq!(h.coeff(2), rat(1, 4));
    }

    #[test]
    fn f_n_small_cases() {
        assert_eq!(f_n_polynomial(1).coeffs()[..1], [rat_int(1)]);
        let f2 = f_n_polynomial(2);
        assert_eq!(f2.coeff(0), rat_int(0));
        assert_eq!(f2.coeff(1), rat_int(1));
        let f3 = f_n_polynomial(3);
        assert_eq!(f3.coeff(0), rat_int(0));
        assert_eq!(f3.coeff(1), rat_int(-1));
        assert_eq!(f3.coeff(2), rat_int(1));
    }

    #[test]
    fn f_n_matches_closed_form_up_to_12() {
        for n in 1..=12 {
            let lhs = f_n_polynomial(n);
            let rhs = f_n_closed_form(n);
            assert!(lhs.sub(&rhs).unwrap().is_zero(), "f_{n} mismatch");
        }
    }

    #[test]
    fn geometric_sum_identity_up_to_12() {
        for n in 1..=12 {
            let lhs = geometric_sum_identity_lhs(n);
            let rhs = geometric_sum_identity_rhs(n);
            assert!(lhs.sub(&rhs).unwrap().is_zero(), "identity fails at n = {n}");
        }
    }

    #[test]
    fn obstruction_series_leading_terms() {
        let f = obstruction_series(6);
        assert_eq!(f.coeff(0), rat_int(1));
        assert_eq!(f.coeff(1), rat_int(2));
        assert_eq!(f.coeff(2), rat(-1, 6));
        for order in 1..=8 {
            assert_eq!(obstruction_series(order).coeff(1), rat_int(2));
        }
    }

    #[test]
    fn arithmetic_contracts() {
        let order = 5;
        let one = TruncatedSeries::one("s", order);
        let s = TruncatedSeries::monomial("s", order, 1, Rational::one());
        let lhs = one.add(&s).unwrap().mul(&one.sub(&s).unwrap()).unwrap();
        let mut want = TruncatedSeries::one("s", order);
        want.set_coeff(2, rat_int(-1));
        assert_eq!(lhs, want);

        // Truncation: min of the operand orders.
        let a = TruncatedSeries::one("s", 3);
        let b = TruncatedSeries::one("s", 5);
        assert_eq!(a.add(&b).unwrap().order(), 3);

        // Substitute x = 1 + s into f_3 = x^2 - x.
        let inner = TruncatedSeries::one("s", 4)
            .add(&TruncatedSeries::monomial("s", 4, 1, Rational::one()))
            .unwrap();
        let image = f_n_polynomial(3).substitute(&inner).unwrap();
        assert_eq!(image.coeff(0), rat_int(0));
        assert_eq!(image.coeff(1), rat_int(1));
        assert_eq!(image.coeff(2), rat_int(1));

        // Non-polynomial series reject substitution with a constant term.
        assert!(h_series(4).substitute(&inner).is_err());
        // Mismatched variables are an error.
        assert!(s_series(3).add(&h_series(3)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = s_series(3);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(
            js,
            r#"{"var":"z","order":3,"coeffs":["-1/2","-1/12","0/1","1/720"]}"#
        );
        let back: TruncatedSeries = serde_json::from_str(&js).unwrap();
        assert_eq!(back.coeffs(), s.coeffs());
    }
}
