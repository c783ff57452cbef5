//! Parameters, half-integer weights and the weight maps attached to subsets.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subsets::Subset;

/// An element of `½Z`, stored doubled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub const fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn from_doubled(d: i64) -> Self {
        HalfInt(d)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value; panics on a proper half-integer.
    pub fn to_int(self) -> i64 {
        assert!(self.is_integer(), "{self} is not an integer");
        self.0 / 2
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("not an integer or half-integer: {s:?}"));
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((a, "2")) => a.trim().parse::<i64>().map(HalfInt).map_err(|_| bad()),
            Some((a, "1")) => a
                .trim()
                .parse::<i64>()
                .map(HalfInt::from_int)
                .map_err(|_| bad()),
            Some(_) => Err(bad()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight: a finite sequence of half-integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<HalfInt>);

impl WeightVec {
    pub fn from_ints(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| HalfInt::from_int(x)).collect())
    }

    pub fn from_doubled(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| HalfInt::from_doubled(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        WeightVec(vec![HalfInt::ZERO; len])
    }

    /// Parses a comma list such as `2,1,0` or `3/2,1/2`.
    pub fn parse_list(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(WeightVec::default());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(WeightVec)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> HalfInt {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.0.iter().copied()
    }

    pub fn sum(&self) -> HalfInt {
        self.iter().fold(HalfInt::ZERO, |a, b| a + b)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn all_integer(&self) -> bool {
        self.iter().all(HalfInt::is_integer)
    }

    /// `(-v_m, ..., -v_1)`.
    pub fn neg_reversed(&self) -> Self {
        WeightVec(self.0.iter().rev().map(|&x| -x).collect())
    }

    pub fn exps2(&self) -> Vec<i32> {
        self.iter().map(|h| h.doubled() as i32).collect()
    }

    pub fn zip_with(&self, o: &WeightVec, f: impl Fn(HalfInt, HalfInt) -> HalfInt) -> WeightVec {
        assert_eq!(self.len(), o.len(), "weight length mismatch");
        WeightVec(self.iter().zip(o.iter()).map(|(a, b)| f(a, b)).collect())
    }

    pub fn add(&self, o: &WeightVec) -> WeightVec {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &WeightVec) -> WeightVec {
        self.zip_with(o, |a, b| a - b)
    }

    /// Entries at the given 1-based positions.
    pub fn restrict(&self, positions: impl IntoIterator<Item = usize>) -> WeightVec {
        WeightVec(positions.into_iter().map(|p| self.0[p - 1]).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// The three orthogonal/symplectic families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    /// Offset γ: ½, 0, 1 for B, C, D.
    pub fn gamma(self) -> HalfInt {
        match self {
            Family::B => HalfInt::HALF,
            Family::C => HalfInt::ZERO,
            Family::D => HalfInt::from_int(1),
        }
    }

    /// γ' = ⌊γ⌋.
    pub fn gamma_floor(self) -> i64 {
        match self {
            Family::D => 1,
            _ => 0,
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Which subsets a family-D computation runs over.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum SpinComponent {
    Even,
    Odd,
    #[default]
    Both,
}

impl SpinComponent {
    pub fn admits(self, s: &Subset) -> bool {
        match self {
            SpinComponent::Both => true,
            SpinComponent::Even => s.len().is_multiple_of(2),
            SpinComponent::Odd => s.len() % 2 == 1,
        }
    }
}

impl FromStr for SpinComponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "even" => Ok(SpinComponent::Even),
            "odd" => Ok(SpinComponent::Odd),
            "both" => Ok(SpinComponent::Both),
            _ => Err(Error::Invalid(format!("unknown spin component {s:?}"))),
        }
    }
}

/// Type A data: `gl_n × gl_k` inside `gl_{n+k}` with an integral weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeAParams {
    pub n: usize,
    pub k: usize,
    pub lambda: WeightVec,
}

impl TypeAParams {
    pub fn new(n: usize, k: usize, lambda: WeightVec) -> Result<Self> {
        let p = TypeAParams { n, k, lambda };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.n < self.k {
            return Err(Error::Invalid(format!(
                "need n >= k >= 1, got n={} k={}",
                self.n, self.k
            )));
        }
        if self.n + self.k > 63 {
            return Err(Error::Invalid("n + k too large".into()));
        }
        if self.lambda.len() != self.n + self.k {
            return Err(Error::Invalid(format!(
                "lambda has {} entries, expected n+k = {}",
                self.lambda.len(),
                self.n + self.k
            )));
        }
        for (i, h) in self.lambda.iter().enumerate() {
            if !h.is_integer() {
                return Err(Error::InvalidWeight {
                    index: i + 1,
                    reason: "type A weights are integral".into(),
                });
            }
        }
        check_decreasing(&self.lambda)
    }

    pub fn m(&self) -> usize {
        self.n + self.k
    }

    /// Number of odd positions in `[n+k]`.
    pub fn q(&self) -> usize {
        self.m().div_ceil(2)
    }
}

/// Family B, C or D data: the `gl_m` Levi with weight λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcdParams {
    pub family: Family,
    pub m: usize,
    pub lambda: WeightVec,
    #[serde(default)]
    pub component: SpinComponent,
}

impl BcdParams {
    pub fn new(family: Family, m: usize, lambda: WeightVec) -> Result<Self> {
        Self::with_component(family, m, lambda, SpinComponent::Both)
    }

    pub fn with_component(
        family: Family,
        m: usize,
        lambda: WeightVec,
        component: SpinComponent,
    ) -> Result<Self> {
        let p = BcdParams {
            family,
            m,
            lambda,
            component,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.m > 63 {
            return Err(Error::Invalid(format!(
                "m must be in 1..=63, got {}",
                self.m
            )));
        }
        if self.lambda.len() != self.m {
            return Err(Error::Invalid(format!(
                "lambda has {} entries, expected m = {}",
                self.lambda.len(),
                self.m
            )));
        }
        if self.component != SpinComponent::Both && self.family != Family::D {
            return Err(Error::Invalid(
                "spin components apply to family D only".into(),
            ));
        }
        let integral = self.lambda.get(0).is_integer();
        for (i, h) in self.lambda.iter().enumerate() {
            if h.is_integer() != integral {
                return Err(Error::InvalidWeight {
                    index: i + 1,
                    reason: "mixes integers and half-integers".into(),
                });
            }
            if !integral && self.family == Family::C {
                return Err(Error::InvalidWeight {
                    index: i + 1,
                    reason: "family C weights are integral".into(),
                });
            }
        }
        check_decreasing(&self.lambda)?;
        if self.lambda.get(self.m - 1) < HalfInt::ZERO {
            return Err(Error::InvalidWeight {
                index: self.m,
                reason: "last entry must be nonnegative".into(),
            });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.m / 2
    }

    pub fn eps(&self) -> usize {
        self.m % 2
    }

    pub fn gamma(&self) -> HalfInt {
        self.family.gamma()
    }

    pub fn gamma_floor(&self) -> i64 {
        self.family.gamma_floor()
    }

    /// 1 when λ_m = 0, else 0.
    pub fn zeta(&self) -> u32 {
        u32::from(self.lambda.get(self.m - 1) == HalfInt::ZERO)
    }

    /// Exponent `γ'ζ(λ)` of the Pin-level double count.
    pub fn pin_shift(&self) -> u32 {
        self.gamma_floor() as u32 * self.zeta()
    }

    /// Positions `[m]_{1-ε}` that index equidistribution blocks.
    pub fn block_positions(&self) -> Vec<usize> {
        (1..=self.m)
            .filter(|i| i % 2 == (1 - self.eps()) % 2)
            .collect()
    }
}

/// Either parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Params {
    A(TypeAParams),
    #[serde(rename = "BCD")]
    Bcd(BcdParams),
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        match self {
            Params::A(p) => p.validate(),
            Params::Bcd(p) => p.validate(),
        }
    }

    /// Compact label such as `C m=3 λ=(1,0,0)`.
    pub fn label(&self) -> String {
        match self {
            Params::A(p) => format!("A n={} k={} lambda={}", p.n, p.k, p.lambda),
            Params::Bcd(p) => {
                let comp = match p.component {
                    SpinComponent::Both => String::new(),
                    c => format!(" component={}", format!("{c:?}").to_lowercase()),
                };
                format!("{} m={} lambda={}{}", p.family, p.m, p.lambda, comp)
            }
        }
    }
}

fn check_decreasing(l: &WeightVec) -> Result<()> {
    for i in 1..l.len() {
        if l.get(i) > l.get(i - 1) {
            return Err(Error::InvalidWeight {
                index: i + 1,
                reason: "not weakly decreasing".into(),
            });
        }
    }
    Ok(())
}

/// `δ_m = (m-1, ..., 0)`.
pub fn delta_a(m: usize) -> WeightVec {
    WeightVec((0..m).rev().map(|v| HalfInt::from_int(v as i64)).collect())
}

/// BCD δ: entry j is `m+1-j-γ`.
pub fn delta_bcd(family: Family, m: usize) -> WeightVec {
    WeightVec(
        (1..=m)
            .map(|j| HalfInt::from_int((m + 1 - j) as i64) - family.gamma())
            .collect(),
    )
}

pub fn delta(p: &Params) -> WeightVec {
    match p {
        Params::A(a) => delta_a(a.m()),
        Params::Bcd(b) => delta_bcd(b.family, b.m),
    }
}

/// `λ + δ` for either parameter set.
pub fn shifted_lambda(p: &Params) -> WeightVec {
    match p {
        Params::A(a) => a.lambda.add(&delta_a(a.m())),
        Params::Bcd(b) => b.lambda.add(&delta_bcd(b.family, b.m)),
    }
}

/// The `gl_n` and `gl_k` weights of the type A term indexed by `S`, `|S| = n`.
pub fn beta_type_a(p: &TypeAParams, s: &Subset) -> Result<(WeightVec, WeightVec)> {
    if s.ambient() != p.m() || s.len() != p.n {
        return Err(Error::Invalid(format!(
            "type A subsets have size n={} in [{}], got {s}",
            p.n,
            p.m()
        )));
    }
    let ld = p.lambda.add(&delta_a(p.m()));
    let kk = WeightVec(vec![HalfInt::from_int(p.k as i64); p.n]);
    let b1 = ld.restrict(s.elements()).sub(&delta_a(p.n)).sub(&kk);
    let b2 = ld.restrict(s.complement().elements()).sub(&delta_a(p.k));
    Ok((b1, b2))
}

/// The `gl_m` weight of the BCD term indexed by `S`, with the sign of the
/// sorting permutation.
pub fn beta_bcd(p: &BcdParams, s: &Subset) -> (WeightVec, i8) {
    assert_eq!(s.ambient(), p.m, "subset ambient mismatch");
    let ld = p.lambda.add(&delta_bcd(p.family, p.m));
    let mut iota: Vec<HalfInt> = ld
        .iter()
        .enumerate()
        .map(|(i, h)| if s.contains(i + 1) { -h } else { h })
        .collect();
    iota.sort_by(|a, b| b.cmp(a));
    let beta = WeightVec(iota).sub(&delta_bcd(p.family, p.m));
    let e = p.m * s.len() + s.sum() as usize;
    (beta, if e.is_multiple_of(2) { 1 } else { -1 })
}

/// The weights whose characters factor the total character. Type A needs
/// `k ∈ {n-1, n}`.
pub fn rho_weights(p: &Params) -> Result<(WeightVec, WeightVec)> {
    match p {
        Params::A(a) => {
            if a.k + 1 != a.n && a.k != a.n {
                return Err(Error::Unsupported(format!(
                    "type A factorization needs k in {{n-1, n}}, got n={} k={}",
                    a.n, a.k
                )));
            }
            let l = |i: usize| a.lambda.get(i - 1);
            let top = (1..=a.n)
                .map(|i| l(2 * i - 1) - HalfInt::from_int(i as i64 - 1))
                .collect();
            let bot = (1..=a.k)
                .map(|i| l(2 * i) + HalfInt::from_int((a.n - i) as i64))
                .collect();
            Ok((WeightVec(top), WeightVec(bot)))
        }
        Params::Bcd(b) => {
            let (n, e, g) = (b.n(), b.eps(), b.gamma());
            let l = |i: usize| b.lambda.get(i - 1);
            let top = (1..=n)
                .map(|i| l(2 * i - 1 + e) + HalfInt::from_int((n + 1 - i) as i64) - g)
                .collect();
            let bot = (1..=n + e)
                .map(|i| l(2 * i - e) + HalfInt::from_int((n + e + 1 - i) as i64) - g)
                .collect();
            Ok((WeightVec(top), WeightVec(bot)))
        }
    }
}

/// Twist of the term indexed by `S` in the resolution, normalized to 0 at
/// the minimal subset.
///
/// Type A: `Σ_{i≤n}(λ+δ)_i − Σ_{s∈S}(λ+δ)_s`. Families C and D:
/// `Σ_{s∈S}(λ+δ)_s`, where for D an odd-size subset is measured from the
/// bottom of its own component (subtract `(λ+δ)_m`). Family B grades `V*`
/// in degree 1 and `∧²V*` in degree 2, which doubles the sum.
pub fn internal_degree(p: &Params, s: &Subset) -> i64 {
    let ld = shifted_lambda(p);
    let on_s = ld.restrict(s.elements()).sum();
    let d = match p {
        Params::A(a) => ld.restrict(1..=a.n).sum() - on_s,
        Params::Bcd(b) => match b.family {
            Family::C => on_s,
            Family::B => on_s + on_s,
            Family::D => {
                if s.len() % 2 == 1 {
                    on_s - ld.get(b.m - 1)
                } else {
                    on_s
                }
            }
        },
    };
    d.to_int()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec::from_ints(v)
    }

    fn sub(m: usize, e: &[usize]) -> Subset {
        Subset::new(m, e).unwrap()
    }

    #[test]
    fn half_int_text_round_trip() {
        for s in ["0", "-3", "7/2", "-1/2"] {
            assert_eq!(s.parse::<HalfInt>().unwrap().to_string(), s);
        }
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_a(4), w(&[3, 2, 1, 0]));
        assert_eq!(delta_bcd(Family::C, 4), w(&[4, 3, 2, 1]));
        assert_eq!(delta_bcd(Family::B, 2), WeightVec::from_doubled(&[3, 1]));
        assert_eq!(delta_bcd(Family::D, 3), w(&[2, 1, 0]));
    }

    #[test]
    fn validation_reports_offending_index() {
        let e = BcdParams::new(Family::C, 3, w(&[1, 2, 0])).unwrap_err();
        assert_eq!(
            e,
            Error::InvalidWeight {
                index: 2,
                reason: "not weakly decreasing".into()
            }
        );
        assert!(BcdParams::new(Family::B, 2, WeightVec::from_doubled(&[3, 1])).is_ok());
        assert!(matches!(
            BcdParams::new(Family::C, 2, WeightVec::from_doubled(&[3, 1])),
            Err(Error::InvalidWeight { index: 1, .. })
        ));
        assert!(matches!(
            BcdParams::new(Family::D, 2, WeightVec::from_doubled(&[3, 2])),
            Err(Error::InvalidWeight { index: 2, .. })
        ));
        assert!(matches!(
            BcdParams::new(Family::C, 2, w(&[0, -1])),
            Err(Error::InvalidWeight { index: 2, .. })
        ));
        assert!(TypeAParams::new(1, 2, w(&[0, 0, 0])).is_err());
        assert!(TypeAParams::new(2, 1, w(&[0, -1, -5])).is_ok());
    }

    #[test]
    fn type_a_betas() {
        let p = TypeAParams::new(2, 2, w(&[1, 1, 0, 0])).unwrap();
        assert_eq!(
            beta_type_a(&p, &sub(4, &[1, 3])).unwrap(),
            (w(&[1, -1]), w(&[2, 0]))
        );
        let p = TypeAParams::new(2, 2, w(&[2, 0, 0, 0])).unwrap();
        assert_eq!(
            beta_type_a(&p, &sub(4, &[2, 4])).unwrap(),
            (w(&[-1, -2]), w(&[4, 1]))
        );
        let p = TypeAParams::new(1, 1, w(&[0, 0])).unwrap();
        assert_eq!(beta_type_a(&p, &sub(2, &[1])).unwrap(), (w(&[0]), w(&[0])));
        assert!(beta_type_a(&p, &sub(2, &[1, 2])).is_err());
    }

    #[test]
    fn bcd_betas() {
        let p = BcdParams::new(Family::C, 4, w(&[1, 0, 0, 0])).unwrap();
        let (b, _) = beta_bcd(&p, &sub(4, &[1, 3]));
        assert_eq!(b, w(&[-1, -2, -4, -6]));
        assert_eq!(b.neg_reversed(), w(&[6, 4, 2, 1]));
        assert_eq!(beta_bcd(&p, &sub(4, &[2, 3])), (w(&[1, -2, -4, -4]), -1));
        assert_eq!(beta_bcd(&p, &Subset::empty(4)), (p.lambda.clone(), 1));
    }

    #[test]
    fn rho_recipes() {
        let a = Params::A(TypeAParams::new(2, 2, w(&[1, 1, 0, 0])).unwrap());
        assert_eq!(rho_weights(&a).unwrap(), (w(&[1, -1]), w(&[2, 0])));
        let c = Params::Bcd(BcdParams::new(Family::C, 4, w(&[1, 0, 0, 0])).unwrap());
        assert_eq!(rho_weights(&c).unwrap(), (w(&[3, 1]), w(&[2, 1])));
        let b = Params::Bcd(BcdParams::new(Family::B, 4, w(&[2, 1, 0, 0])).unwrap());
        assert_eq!(
            rho_weights(&b).unwrap(),
            (
                WeightVec::from_doubled(&[7, 1]),
                WeightVec::from_doubled(&[5, 1])
            )
        );
        let a31 = Params::A(TypeAParams::new(3, 1, w(&[0; 4])).unwrap());
        assert!(matches!(rho_weights(&a31), Err(Error::Unsupported(_))));
    }

    #[test]
    fn internal_degrees_match_printed_twists() {
        let a = Params::A(TypeAParams::new(2, 2, w(&[1, 1, 0, 0])).unwrap());
        assert_eq!(internal_degree(&a, &sub(4, &[1, 3])), 2);
        assert_eq!(internal_degree(&a, &sub(4, &[1, 2])), 0);
        let c = Params::Bcd(BcdParams::new(Family::C, 4, w(&[1, 0, 0, 0])).unwrap());
        assert_eq!(internal_degree(&c, &sub(4, &[2, 4])), 4);
        assert_eq!(internal_degree(&c, &sub(4, &[4])), 1);
        assert_eq!(internal_degree(&c, &sub(4, &[1])), 5);
        assert_eq!(internal_degree(&c, &Subset::empty(4)), 0);
        let d =
            Params::Bcd(BcdParams::new(Family::D, 4, WeightVec::from_doubled(&[1; 4])).unwrap());
        assert_eq!(internal_degree(&d, &sub(4, &[4])), 0);
        assert_eq!(internal_degree(&d, &sub(4, &[3, 4])), 2);
    }
}
