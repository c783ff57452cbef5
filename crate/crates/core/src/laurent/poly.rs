use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::{from_int, Scalar};

/// Exponent vector in half-units: entry `e` stands for the power `e/2`.
/// Slot 0 is always the grading variable `t`.
pub type ExponentVec = Vec<i32>;

/// A Laurent polynomial in `arity` variables with half-integer exponents.
///
/// Terms live in a `BTreeMap`, so iteration is in lexicographic exponent
/// order and zero coefficients are never stored. Two polynomials are equal
/// exactly when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    arity: usize,
    terms: BTreeMap<ExponentVec, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, C::one())
    }

    pub fn constant(arity: usize, c: C) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    /// `c * x^exp`, with `exp` in half-units.
    pub fn monomial(exp: ExponentVec, c: C) -> Self {
        let arity = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { arity, terms }
    }

    /// The variable `x_i` (slot 0 is `t`).
    pub fn var(arity: usize, i: usize) -> Self {
        Self::var_pow2(arity, i, 2)
    }

    /// `x_i^(half/2)`.
    pub fn var_pow2(arity: usize, i: usize, half: i32) -> Self {
        assert!(i < arity, "variable {i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i] = half;
        Self::monomial(e, C::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(arity: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVec, C)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in it {
            if e.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVec, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&ExponentVec, &C)> {
        self.terms.iter().next_back()
    }

    /// Single term `(exp, c)` if the polynomial is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&ExponentVec, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Largest and smallest half-unit exponent of variable `i`.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Sum of all coefficients, i.e. the value at `(1, ..., 1)`.
    pub fn coefficient_sum(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn add_term(&mut self, exp: ExponentVec, c: C) {
        debug_assert_eq!(exp.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the monomial `c * x^exp`.
    pub fn mul_monomial(&self, exp: &[i32], c: &C) -> Self {
        assert_eq!(exp.len(), self.arity, "arity mismatch");
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (add_exp(e, exp), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`.
    ///
    /// Runs leading-term division in lex order. Every quotient term of an
    /// exact division lies in the box cut out by the per-variable degree
    /// ranges of `self` and `d`; a candidate outside it proves inexactness,
    /// which keeps the loop finite in the Laurent setting.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        self.check_arity(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut q = Self::zero(self.arity);
        if self.is_zero() {
            return Ok(q);
        }
        let bounds: Vec<(i32, i32)> = (0..self.arity)
            .map(|i| {
                let (plo, phi) = self.degree_range(i).unwrap();
                let (dlo, dhi) = d.degree_range(i).unwrap();
                (plo - dlo, phi - dhi)
            })
            .collect();
        let (dlead_e, dlead_c) = {
            let (e, c) = d.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        let mut rem = self.terms.clone();
        while let Some((re, rc)) = rem.pop_last() {
            let qe = sub_exp(&re, &dlead_e);
            if qe
                .iter()
                .zip(&bounds)
                .any(|(&x, &(lo, hi))| x < lo || x > hi)
            {
                rem.insert(re, rc);
                let r = LaurentPoly {
                    arity: self.arity,
                    terms: rem,
                };
                return Err(Error::NotDivisible {
                    remainder: r.to_string(),
                });
            }
            let qc = rc / dlead_c.clone();
            for (de, dc) in d.terms.iter().rev().skip(1) {
                let e = add_exp(&qe, de);
                let v = qc.clone() * dc.clone();
                match rem.entry(e) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(-v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().clone() - v;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
            q.terms.insert(qe, qc);
        }
        Ok(q)
    }

    /// Replaces variable `i` by `images[i]`; the result has the arity of the
    /// images.
    ///
    /// A variable that occurs with a negative or half-integer exponent must
    /// map to a monomial; half-integer powers further need coefficient 1 and
    /// integer exponents in the image.
    pub fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: images.len(),
            });
        }
        let target = images.first().map(|p| p.arity).unwrap_or(0);
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(Error::ArityMismatch {
                left: target,
                right: bad.arity,
            });
        }
        let mut cache: Vec<HashMap<i32, Self>> = vec![HashMap::new(); self.arity];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for (i, &h) in e.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                if !cache[i].contains_key(&h) {
                    let p = power_of_image(&images[i], h, i)?;
                    cache[i].insert(h, p);
                }
                acc = &acc * &cache[i][&h];
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Sets variable `i` to 1, keeping the arity.
    pub fn set_one(&self, i: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Re-reads the polynomial in `arity` variables: padding with unused
    /// trailing variables, or dropping trailing variables that do not occur.
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        if arity < self.arity {
            for i in arity..self.arity {
                if self.terms.keys().any(|e| e[i] != 0) {
                    return Err(Error::ArityMismatch {
                        left: self.arity,
                        right: arity,
                    });
                }
            }
        }
        Ok(LaurentPoly {
            arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(arity, 0);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Keeps only the terms whose `t`-exponent is `2*d` (i.e. `t^d`), with
    /// `t` removed.
    pub fn t_coefficient(&self, d: i32) -> Self {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] == 2 * d)
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[0] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Renders with `t` and variables `{prefix}1, {prefix}2, ...`.
    pub fn display_with(&self, prefix: &str) -> String {
        let names = var_names(self.arity, prefix);
        render(self, &names)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        } else {
            Ok(())
        }
    }
}

/// Variable names for an arity: `t` followed by `{prefix}1 ... `.
pub fn var_names(arity: usize, prefix: &str) -> Vec<String> {
    (0..arity)
        .map(|i| {
            if i == 0 {
                "t".to_string()
            } else {
                format!("{prefix}{i}")
            }
        })
        .collect()
}

fn power_of_image<C: Scalar>(img: &LaurentPoly<C>, h: i32, var: usize) -> Result<LaurentPoly<C>> {
    if let Some((f, c)) = img.as_monomial() {
        if h % 2 != 0 {
            if !c.is_one() {
                return Err(Error::BadSubstitution {
                    var,
                    reason: "half-integer power of a monomial with coefficient other than 1".into(),
                });
            }
            if f.iter().any(|x| x % 2 != 0) {
                return Err(Error::BadSubstitution {
                    var,
                    reason: "half-integer power of a half-integer monomial".into(),
                });
            }
        }
        let e: Vec<i32> = f.iter().map(|&x| x * h / 2).collect();
        let k = (h / 2).unsigned_abs();
        let mut cc = num_traits::pow(c.clone(), k as usize);
        if h < 0 {
            cc = C::one() / cc;
        }
        return Ok(LaurentPoly::monomial(e, cc));
    }
    if img.is_zero() && h > 0 && h % 2 == 0 {
        return Ok(LaurentPoly::zero(img.arity));
    }
    if h < 0 || h % 2 != 0 {
        return Err(Error::BadSubstitution {
            var,
            reason: "negative or half-integer power of a non-monomial".into(),
        });
    }
    Ok(img.pow((h / 2) as u32))
}

fn add_exp(a: &[i32], b: &[i32]) -> ExponentVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_exp(a: &[i32], b: &[i32]) -> ExponentVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn fmt_exponent(h: i32) -> String {
    if h % 2 == 0 {
        let v = h / 2;
        if v < 0 {
            format!("^({v})")
        } else {
            format!("^{v}")
        }
    } else {
        format!("^({h}/2)")
    }
}

fn render<C: Scalar>(p: &LaurentPoly<C>, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // Highest terms first reads more naturally.
    for (k, (e, c)) in p.terms.iter().rev().enumerate() {
        let s = c.to_string();
        let (sign, mag) = match s.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", s),
        };
        if k == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &h)| h != 0)
            .map(|(i, &h)| {
                if h == 2 {
                    names[i].clone()
                } else {
                    format!("{}{}", names[i], fmt_exponent(h))
                }
            })
            .collect();
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono.join("*"));
        } else {
            out.push_str(&format!("{mag}*{}", mono.join("*")));
        }
    }
    out
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, &var_names(self.arity, "x")))
    }
}

impl<'a, C: Scalar> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Scalar> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl<'a, C: Scalar> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a, C: Scalar> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc: HashMap<ExponentVec, C> =
            HashMap::with_capacity(big.len() * small.len().min(8));
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                let e = add_exp(ea, eb);
                let v = ca.clone() * cb.clone();
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Vacant(s) => {
                        s.insert(v);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = o.get().clone() + v;
                        *o.get_mut() = s;
                    }
                }
            }
        }
        LaurentPoly {
            arity: self.arity,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Scalar> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

/// `(1 + t)^k` in the given arity.
pub fn one_plus_t_pow<C: Scalar>(arity: usize, k: u32) -> LaurentPoly<C> {
    (LaurentPoly::one(arity) + LaurentPoly::var(arity, 0)).pow(k)
}

/// `sum_{r=0}^{upper} (-t)^r`; zero when `upper < 0`.
pub fn alternating_t_sum<C: Scalar>(arity: usize, upper: i64) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(arity);
    for r in 0..=upper {
        let mut e = vec![0; arity];
        e[0] = 2 * r as i32;
        out.add_term(e, from_int(if r % 2 == 0 { 1 } else { -1 }));
    }
    out
}
