//! Sparse multivariate polynomials over Q, plus dense univariate helpers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{self, Rational};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Sparse polynomial in `num_vars` variables. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        Self::monomial(num_vars, vec![0; num_vars], c)
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, e, Rational::one())
    }

    pub fn monomial(num_vars: usize, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent length mismatch");
        let mut p = Self::zero(num_vars);
        p.add_term(exps, c);
        p
    }

    /// Polynomial with the given coefficients on the given monomials.
    pub fn from_coefficients(num_vars: usize, monomials: &[Exponents], coeffs: &[Rational]) -> Self {
        assert_eq!(monomials.len(), coeffs.len());
        let mut p = Self::zero(num_vars);
        for (m, c) in monomials.iter().zip(coeffs) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient vector against a list of monomials (monomials not listed are ignored).
    pub fn coefficients_on(&self, monomials: &[Exponents]) -> Vec<Rational> {
        monomials.iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        debug_assert_eq!(exps.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = Self::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.num_vars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.num_vars, "evaluation point dimension");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes the `Some` entries of `values` and keeps the `None` variables,
    /// renumbered in their original order.
    pub fn partial_eval(&self, values: &[Option<Rational>]) -> Self {
        assert_eq!(values.len(), self.num_vars);
        let kept: Vec<usize> = (0..self.num_vars).filter(|&i| values[i].is_none()).collect();
        let mut out = Self::zero(kept.len());
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    if e[i] > 0 {
                        t *= num_traits::pow(v.clone(), e[i] as usize);
                    }
                }
            }
            out.add_term(kept.iter().map(|&i| e[i]).collect(), t);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * rational::int(e[i] as i64));
            }
        }
        out
    }

    /// Dense coefficients (low degree first) of a univariate polynomial.
    pub fn to_dense(&self) -> Option<Vec<Rational>> {
        if self.num_vars != 1 {
            return None;
        }
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut v = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            v[e[0] as usize] = c.clone();
        }
        Some(trim(v))
    }

    pub fn from_dense(coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p
    }

    /// Renders with variable names `names[i]`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // highest degree first reads better
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&rational::to_text(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&rational::to_text(&mag));
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }

    pub fn default_names(num_vars: usize) -> Vec<String> {
        (0..num_vars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Self::default_names(self.num_vars)))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<(&Exponents, String)> = self.terms.iter().map(|(e, c)| (e, rational::to_text(c))).collect();
        let mut st = s.serialize_struct("MultiPoly", 2)?;
        st.serialize_field("num_vars", &self.num_vars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            num_vars: usize,
            terms: Vec<(Exponents, String)>,
        }
        let raw = Raw::deserialize(d)?;
        let mut p = MultiPoly::zero(raw.num_vars);
        for (e, c) in raw.terms {
            if e.len() != raw.num_vars {
                return Err(serde::de::Error::custom("exponent length mismatch"));
            }
            p.add_term(e, rational::parse(&c).map_err(serde::de::Error::custom)?);
        }
        Ok(p)
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// the first row. Meant for the small minors used in rank-drop tests.
pub fn determinant(m: &[Vec<MultiPoly>], num_vars: usize) -> MultiPoly {
    let k = m.len();
    if k == 0 {
        return MultiPoly::constant(num_vars, Rational::one());
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(num_vars);
    for c in 0..k {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][c].mul(&determinant(&minor, num_vars));
        acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// All exponent vectors of total degree `d` in `n` variables, in descending
/// lexicographic order (`x0^d` first).
pub fn monomials(n: usize, d: u32) -> Vec<Exponents> {
    fn rec(n: usize, d: u32, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

// ---- dense univariate helpers (coefficients low degree first, trimmed) ----

pub(crate) fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn uni_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    while r.len() > db {
        let dr = r.len() - 1;
        let q = &r[dr] * &lead_inv;
        for i in 0..=db {
            let t = &q * &b[i];
            r[dr - db + i] -= t;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn uni_monic(p: &[Rational]) -> Vec<Rational> {
    match p.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub(crate) fn uni_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    uni_monic(&a)
}

pub(crate) fn uni_derivative(p: &[Rational]) -> Vec<Rational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rational::int(k as i64))
            .collect(),
    )
}

/// Monic gcd of univariate polynomials; the zero polynomial for an empty or all-zero list.
pub fn poly_gcd_univariate(ps: &[MultiPoly]) -> MultiPoly {
    let mut g: Vec<Rational> = Vec::new();
    for p in ps {
        let d = p.to_dense().expect("poly_gcd_univariate needs univariate input");
        g = uni_gcd(&g, &d);
    }
    MultiPoly::from_dense(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    fn uni(c: &[i64]) -> MultiPoly {
        MultiPoly::from_dense(&rational::ints(c))
    }

    #[test]
    fn gcd_examples() {
        // u^2 - 1, u - 1
        assert_eq!(poly_gcd_univariate(&[uni(&[-1, 0, 1]), uni(&[-1, 1])]), uni(&[-1, 1]));
        assert_eq!(poly_gcd_univariate(&[uni(&[0, 1]), uni(&[1, 1])]), uni(&[1]));
        assert!(poly_gcd_univariate(&[]).is_zero());
        assert!(poly_gcd_univariate(&[MultiPoly::zero(1), MultiPoly::zero(1)]).is_zero());
        // monic normalisation
        assert_eq!(poly_gcd_univariate(&[uni(&[2, 4])]), MultiPoly::from_dense(&[frac(1, 2), int(1)]));
    }

    #[test]
    fn monomial_enumeration() {
        let m = monomials(3, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0], vec![2, 0, 0]);
        assert_eq!(m[5], vec![0, 0, 2]);
        assert_eq!(monomials(4, 12).len(), 455);
    }

    #[test]
    fn arithmetic_and_eval() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = x.add(&y).pow(2).sub(&x.mul(&y).scale(&int(2)));
        // (x+y)^2 - 2xy = x^2 + y^2
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.eval(&[int(3), int(4)]), int(25));
        assert!(p.is_homogeneous());
        assert_eq!(p.derivative(0), x.scale(&int(2)));
        assert_eq!(format!("{p}"), "x0^2 + x1^2");
    }

    #[test]
    fn determinants_and_serde() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        let d = determinant(&m, 2);
        assert_eq!(d, x.pow(2).sub(&y.pow(2)));
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<MultiPoly>(&text).unwrap(), d);
    }

    #[test]
    fn partial_eval_drops_fixed_vars() {
        let z = MultiPoly::var(3, 0);
        let x = MultiPoly::var(3, 2);
        let p = z.mul(&x).add(&z);
        let q = p.partial_eval(&[Some(int(2)), Some(int(0)), None]);
        assert_eq!(q.num_vars(), 1);
        assert_eq!(q, MultiPoly::from_dense(&[int(2), int(2)]));
    }
}
