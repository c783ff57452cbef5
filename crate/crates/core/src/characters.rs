//! Bracket determinants, Weyl character quotients and formal dimensions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, PolyMatrix};
use crate::scalar::{from_int, Scalar};
use crate::weights::{HalfInt, WeightVec};

/// The four alternants. `B` and `C` are the same function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketKind {
    A,
    B,
    C,
    D,
}

impl BracketKind {
    pub const ALL: [BracketKind; 4] = [
        BracketKind::A,
        BracketKind::B,
        BracketKind::C,
        BracketKind::D,
    ];
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format!("{self:?}").to_lowercase())
    }
}

/// Character families. `Pin` applies the multiplicity rule on top of `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharFamily {
    A,
    B,
    C,
    D,
    Pin,
}

/// Multiplier applied to `s^D` by [`CharFamily::Pin`] when the last entry of
/// the weight is zero. This is the printed rule; the Weyl character formula
/// for the orthogonal algebra gives `s^D / 2` for the irreducible there
/// instead, so theorem-level checks never go through `Pin`.
pub const PIN_ZERO_TAIL_MULTIPLIER: i64 = 2;

/// `x_i^{α_j}` as a half-unit exponent vector of arity `m+1`.
fn mono_exp(m: usize, i: usize, a: HalfInt) -> Vec<i32> {
    let mut e = vec![0; m + 1];
    e[i + 1] = a.doubled() as i32;
    e
}

/// The alternant of the given kind at `α` in `x_1..x_m` (arity `m+1`).
pub fn bracket_det<C: Scalar>(
    kind: BracketKind,
    alpha: &WeightVec,
    m: usize,
) -> Result<LaurentPoly<C>> {
    if alpha.len() != m {
        return Err(Error::Invalid(format!(
            "weight {alpha} has {} entries, expected {m}",
            alpha.len()
        )));
    }
    let mat = PolyMatrix::from_fn(m, m, m + 1, |i, j| {
        let a = alpha.get(j);
        let up = LaurentPoly::monomial(mono_exp(m, i, a), C::one());
        let down = LaurentPoly::monomial(mono_exp(m, i, -a), C::one());
        match kind {
            BracketKind::A => up,
            BracketKind::B | BracketKind::C => up - down,
            BracketKind::D => up + down,
        }
    })?;
    let det = mat.determinant_bounded(usize::MAX)?;
    Ok(match kind {
        BracketKind::D => det.scale(&(C::one() / from_int(2))),
        _ => det,
    })
}

/// `ρ` for the given kind in `m` variables.
pub fn rho(kind: BracketKind, m: usize) -> WeightVec {
    // Doubled offsets over (m-1, ..., 0): A and D add 0, B adds ½, C adds 1.
    let off = match kind {
        BracketKind::A | BracketKind::D => 0,
        BracketKind::B => 1,
        BracketKind::C => 2,
    };
    WeightVec(
        (0..m)
            .map(|i| HalfInt::from_doubled(2 * (m - 1 - i) as i64 + off))
            .collect(),
    )
}

/// The formal character of the family at `λ` in `x_1..x_m` (arity `m+1`).
pub fn weyl_char<C: Scalar>(
    family: CharFamily,
    lambda: &WeightVec,
    m: usize,
) -> Result<LaurentPoly<C>> {
    let kind = match family {
        CharFamily::A => BracketKind::A,
        CharFamily::B => BracketKind::B,
        CharFamily::C => BracketKind::C,
        CharFamily::D | CharFamily::Pin => BracketKind::D,
    };
    let r = rho(kind, m);
    let num = bracket_det::<C>(kind, &lambda.add(&r), m)?;
    let den = bracket_det::<C>(kind, &r, m)?;
    let q = num.exact_divide(&den)?;
    Ok(match family {
        CharFamily::D => q.scale(&from_int(2)),
        CharFamily::Pin => {
            let zero_tail = lambda.iter().last() == Some(HalfInt::ZERO);
            let mult = if zero_tail {
                2 * PIN_ZERO_TAIL_MULTIPLIER
            } else {
                2
            };
            q.scale(&from_int(mult))
        }
        _ => q,
    })
}

/// Product form of the alternant at `ρ`, expanded.
///
/// For kinds `b` and `d` the pair factor is `(x_i x_j − 1)`; kind `c` uses
/// the same pair factor, which is what the determinant produces. Writing
/// `(1 − x_i x_j)` there instead is off by `(−1)^{C(m,2)}`.
pub fn denominator_closed_form<C: Scalar>(kind: BracketKind, m: usize) -> LaurentPoly<C> {
    let ar = m + 1;
    let x = |i: usize| LaurentPoly::<C>::var(ar, i + 1);
    let one = LaurentPoly::<C>::one(ar);
    let mut p = one.clone();
    for i in 0..m {
        for j in i + 1..m {
            p = &p * &(&x(i) - &x(j));
            if kind != BracketKind::A {
                p = &p * &(&(&x(i) * &x(j)) - &one);
            }
        }
    }
    // Overall monomial prefactor, as a half-unit exponent per variable.
    let pref2: i32 = match kind {
        BracketKind::A => 0,
        BracketKind::B => -(2 * m as i32 - 1),
        BracketKind::C => -2 * m as i32,
        BracketKind::D => -2 * (m as i32 - 1),
    };
    for i in 0..m {
        match kind {
            BracketKind::B => p = &p * &(&x(i) - &one),
            BracketKind::C => p = &p * &(&(&x(i) * &x(i)) - &one),
            _ => {}
        }
    }
    let mut e = vec![pref2; ar];
    e[0] = 0;
    p.mul_monomial(&e, &C::one())
}

/// Groups whose formal dimension products are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DimGroup {
    /// `gl_r`: `∏_{i<j}(λ_i − λ_j + j − i)/(j − i)`.
    Gl,
    /// `sp_{2r}`: the value of `s^C_λ` at the identity.
    Sp,
    /// `so_{2r+1}`: the value of `s^B_λ` at the identity.
    SoOdd,
    /// The value of `s^D_λ` at the identity, including its factor 2.
    Pin,
}

impl FromStr for DimGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(DimGroup::Gl),
            "sp" => Ok(DimGroup::Sp),
            "soodd" | "so_odd" | "pinodd" => Ok(DimGroup::SoOdd),
            "pin" => Ok(DimGroup::Pin),
            _ => Err(Error::Invalid(format!("unknown group {s:?}"))),
        }
    }
}

/// Exact formal dimension of the weight for the group of rank `len(λ)`.
pub fn dim_formal<C: Scalar>(group: DimGroup, lambda: &WeightVec) -> C {
    let r = lambda.len() as i64;
    // Work in doubled units to stay integral: a value v is 2v here.
    let l: Vec<i64> = lambda.iter().map(|h| h.doubled()).collect();
    let q = |num: i64, den: i64| from_int::<C>(num) / from_int::<C>(den);
    let mut acc = C::one();
    for i in 0..r {
        for j in i + 1..r {
            let (li, lj) = (l[i as usize], l[j as usize]);
            let gap = 2 * (j - i);
            acc = acc * q(li - lj + gap, gap);
            acc = match group {
                DimGroup::Gl => acc,
                DimGroup::Sp => {
                    acc * q(
                        li + lj + 2 * (2 * r + 2 - i - j - 2),
                        2 * (2 * r + 2 - i - j - 2),
                    )
                }
                DimGroup::SoOdd => {
                    acc * q(
                        li + lj + 2 * (2 * r + 1 - i - j - 2),
                        2 * (2 * r + 1 - i - j - 2),
                    )
                }
                DimGroup::Pin => {
                    acc * q(li + lj + 2 * (2 * r - i - j - 2), 2 * (2 * r - i - j - 2))
                }
            };
        }
    }
    match group {
        DimGroup::Gl => acc,
        DimGroup::Sp => {
            // Diagonal factors i = j of the symplectic product.
            for i in 0..r {
                let base = 2 * (2 * r + 2 - 2 * i - 2);
                acc = acc * q(2 * l[i as usize] + base, base);
            }
            acc
        }
        DimGroup::SoOdd => {
            for i in 0..r {
                let base = 2 * (r - i) - 1;
                acc = acc * q(l[i as usize] + base, base);
            }
            acc
        }
        DimGroup::Pin => acc * from_int(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    type Q = BigRational;
    type P = LaurentPoly<Q>;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec::from_ints(v)
    }

    fn h(v: &[i64]) -> WeightVec {
        WeightVec::from_doubled(v)
    }

    fn x(ar: usize, i: usize) -> P {
        P::var(ar, i)
    }

    fn xp(ar: usize, i: usize, pow: i32) -> P {
        P::var_pow2(ar, i, 2 * pow)
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn rho_vectors() {
        assert_eq!(rho(BracketKind::A, 3), w(&[2, 1, 0]));
        assert_eq!(rho(BracketKind::D, 3), w(&[2, 1, 0]));
        assert_eq!(rho(BracketKind::C, 3), w(&[3, 2, 1]));
        assert_eq!(rho(BracketKind::B, 3), h(&[5, 3, 1]));
    }

    #[test]
    fn small_alternants() {
        let a: P = bracket_det(BracketKind::A, &w(&[1, 0]), 2).unwrap();
        assert_eq!(a, &x(3, 1) - &x(3, 2));
        let c: P = bracket_det(BracketKind::C, &w(&[1]), 1).unwrap();
        assert_eq!(c, &x(2, 1) - &xp(2, 1, -1));
        let d: P = bracket_det(BracketKind::D, &w(&[1, 0]), 2).unwrap();
        let expect = &(&x(3, 1) + &xp(3, 1, -1)) - &(&x(3, 2) + &xp(3, 2, -1));
        assert_eq!(d, expect);
    }

    #[test]
    fn small_characters() {
        let a: P = weyl_char(CharFamily::A, &w(&[1, 0]), 2).unwrap();
        assert_eq!(a, &x(3, 1) + &x(3, 2));
        let c: P = weyl_char(CharFamily::C, &w(&[1]), 1).unwrap();
        assert_eq!(c, &x(2, 1) + &xp(2, 1, -1));
        let t: P = weyl_char(CharFamily::A, &w(&[0, -1]), 2).unwrap();
        assert_eq!(t, &xp(3, 1, -1) + &xp(3, 2, -1));
        let b: P = weyl_char(CharFamily::B, &h(&[1]), 1).unwrap();
        assert_eq!(b, &P::var_pow2(2, 1, 1) + &P::var_pow2(2, 1, -1));
    }

    #[test]
    fn pin_rule_doubles_zero_tail() {
        let d: P = weyl_char(CharFamily::D, &w(&[2, 0]), 2).unwrap();
        let pin: P = weyl_char(CharFamily::Pin, &w(&[2, 0]), 2).unwrap();
        assert_eq!(d.coefficient_sum(), q(18, 1));
        assert_eq!(pin, d.scale(&q(2, 1)));
        let d21: P = weyl_char(CharFamily::D, &w(&[2, 1]), 2).unwrap();
        assert_eq!(
            weyl_char::<Q>(CharFamily::Pin, &w(&[2, 1]), 2).unwrap(),
            d21
        );
    }

    #[test]
    fn closed_forms_small() {
        let a: P = denominator_closed_form(BracketKind::A, 3);
        let expect = &(&(&x(4, 1) - &x(4, 2)) * &(&x(4, 1) - &x(4, 3))) * &(&x(4, 2) - &x(4, 3));
        assert_eq!(a, expect);
        let one = P::one(3);
        let y12 = &x(3, 1) * &x(3, 2);
        let d: P = denominator_closed_form(BracketKind::D, 2);
        let expect = (&(&x(3, 1) - &x(3, 2)) * &(&y12 - &one)).mul_monomial(&[0, -2, -2], &q(1, 1));
        assert_eq!(d, expect);
        let c: P = denominator_closed_form(BracketKind::C, 1);
        assert_eq!(
            c,
            (&(&x(2, 1) * &x(2, 1)) - &P::one(2)).mul_monomial(&[0, -2], &q(1, 1))
        );
    }

    #[test]
    fn printed_c_pair_factor_is_off_by_sign() {
        // (1 - x1 x2) in place of (x1 x2 - 1) negates the m = 2 closed form.
        let det: P = bracket_det(BracketKind::C, &rho(BracketKind::C, 2), 2).unwrap();
        let ar = 3;
        let one = P::one(ar);
        let y12 = &x(ar, 1) * &x(ar, 2);
        let printed = (&(&(&(&x(ar, 1) - &x(ar, 2)) * &(&one - &y12))
            * &(&(&x(ar, 1) * &x(ar, 1)) - &one))
            * &(&(&x(ar, 2) * &x(ar, 2)) - &one))
            .mul_monomial(&[0, -4, -4], &q(1, 1));
        assert_eq!(printed, -det);
    }

    #[test]
    fn formal_dimensions() {
        assert_eq!(dim_formal::<Q>(DimGroup::Sp, &w(&[3, 1])), q(35, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Pin, &w(&[2, 1])), q(16, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Sp, &h(&[3, 1])), q(35, 4));
        assert_eq!(dim_formal::<Q>(DimGroup::Pin, &h(&[3, 1])), q(12, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Pin, &h(&[5, 3, 1])), q(280, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Sp, &h(&[7, 1])), q(77, 2));
        assert_eq!(dim_formal::<Q>(DimGroup::Pin, &h(&[5, 1])), q(24, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Pin, &w(&[3, 1])), q(30, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Pin, &w(&[2, 0])), q(18, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Sp, &w(&[2, 0])), q(10, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::SoOdd, &w(&[1])), q(3, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::SoOdd, &h(&[1])), q(2, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Gl, &w(&[4, 2, 2, 0])), q(84, 1));
        assert_eq!(dim_formal::<Q>(DimGroup::Gl, &w(&[])), q(1, 1));
    }

    #[test]
    fn machine_rationals_agree_with_big_rationals() {
        let big: P = weyl_char(CharFamily::C, &w(&[2, 1]), 2).unwrap();
        let small: LaurentPoly<Rational64> = weyl_char(CharFamily::C, &w(&[2, 1]), 2).unwrap();
        assert_eq!(big.to_string(), small.to_string());
        assert_eq!(
            dim_formal::<Rational64>(DimGroup::Sp, &h(&[7, 1])),
            Rational64::new(77, 2)
        );
    }
}
