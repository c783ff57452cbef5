//! Alternant factorizations, staircase coincidences and denominator products.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::characters::{
    bracket_det, denominator_closed_form, rho, weyl_char, BracketKind, CharFamily,
};
use crate::error::{Error, Result};
use crate::report::{poly_witness, CheckOutcome, VerdictReport};
use crate::{ratio, Poly, Rational};

/// The named identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    AdeltaEven,
    AdeltaOdd,
    StairSpPin,
    StairSoOddPin,
    DenomProduct,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::AdeltaEven,
        Identity::AdeltaOdd,
        Identity::StairSpPin,
        Identity::StairSoOddPin,
        Identity::DenomProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::AdeltaEven => "adelta_even",
            Identity::AdeltaOdd => "adelta_odd",
            Identity::StairSpPin => "stair_sp_pin",
            Identity::StairSoOddPin => "stair_soOdd_pin",
            Identity::DenomProduct => "denom_product",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown identity {s:?}")))
    }
}

/// Checks the identity at the given size: `n` for the alternant and
/// staircase identities, `m` for the denominator products (all four kinds).
pub fn check_identity(id: Identity, size: usize) -> VerdictReport {
    VerdictReport::run(id.name(), json!({ "size": size }), || {
        if size == 0 {
            return Err(Error::Invalid("size must be positive".into()));
        }
        match id {
            Identity::AdeltaEven => adelta_even(size),
            Identity::AdeltaOdd => adelta_odd(size),
            Identity::StairSpPin => stair(BracketKind::C, size),
            Identity::StairSoOddPin => stair(BracketKind::B, size),
            Identity::DenomProduct => {
                for kind in BracketKind::ALL {
                    if let Some(w) = denom_product(kind, size)? {
                        return Ok(Some(json!({ "kind": kind.to_string(), "diff": w })));
                    }
                }
                Ok(None)
            }
        }
    })
}

/// `a_ρ` in `m` variables specialized to the given images in `y_1..y_n`.
fn a_rho_at(m: usize, images: Vec<Poly>) -> Result<Poly> {
    let a: Poly = bracket_det(BracketKind::A, &rho(BracketKind::A, m), m)?;
    a.substitute(&images)
}

fn y(n: usize, i: usize, e: i32) -> Poly {
    Poly::var_pow2(n + 1, i, 2 * e)
}

fn adelta_even(n: usize) -> CheckOutcome {
    let mut img = vec![Poly::var(n + 1, 0)];
    img.extend((1..=n).map(|i| y(n, i, 1)));
    img.extend((1..=n).rev().map(|i| y(n, i, -1)));
    let lhs = a_rho_at(2 * n, img)?;
    let c: Poly = bracket_det(BracketKind::C, &rho(BracketKind::C, n), n)?;
    let d: Poly = bracket_det(BracketKind::D, &rho(BracketKind::D, n), n)?;
    Ok(poly_witness(&lhs, &(&c * &d), "y"))
}

fn adelta_odd(n: usize) -> CheckOutcome {
    let mut img = vec![Poly::var(n + 1, 0)];
    img.extend((1..=n).map(|i| y(n, i, 1)));
    img.push(Poly::one(n + 1));
    img.extend((1..=n).rev().map(|i| y(n, i, -1)));
    let lhs = a_rho_at(2 * n + 1, img)?;
    let c: Poly = bracket_det(BracketKind::C, &rho(BracketKind::C, n), n)?;
    let d: Poly = bracket_det::<Rational>(BracketKind::D, &rho(BracketKind::D, n + 1), n + 1)?
        .set_one(n + 1)
        .with_arity(n + 1)?;
    if let Some(w) = poly_witness(&lhs, &(&c * &d), "y") {
        return Ok(Some(json!({ "form": "c·d", "diff": w })));
    }
    let b: Poly = bracket_det(BracketKind::B, &rho(BracketKind::B, n), n)?;
    let mut rhs = &b * &b;
    for i in 1..=n {
        rhs = &rhs * &(&y(n, i, 1) - &y(n, i, -1));
    }
    Ok(poly_witness(&lhs, &rhs, "y").map(|w| json!({ "form": "b^2", "diff": w })))
}

/// `s^C_{ρ^C} = s^D_{ρ^C}` (kind C). For kind B the coincidence
/// `s^B_{ρ^B} = s^D_{ρ^B}` only holds at `n = 1`; the checked identity is
/// `s^B_{ρ^B} = Π_j (y_j^{1/2} + y_j^{-1/2}) · s^D_{ρ^D} / 2`, which agrees
/// with it at `n = 1`.
fn stair(kind: BracketKind, n: usize) -> CheckOutcome {
    if kind == BracketKind::C {
        let w = rho(kind, n);
        let lhs: Poly = weyl_char(CharFamily::C, &w, n)?;
        let rhs: Poly = weyl_char(CharFamily::D, &w, n)?;
        return Ok(poly_witness(&lhs, &rhs, "y"));
    }
    let lhs: Poly = weyl_char(CharFamily::B, &rho(BracketKind::B, n), n)?;
    let mut rhs: Poly =
        weyl_char::<Rational>(CharFamily::D, &rho(BracketKind::D, n), n)?.scale(&ratio(1, 2));
    for i in 1..=n {
        rhs = &rhs * &(&Poly::var_pow2(n + 1, i, 1) + &Poly::var_pow2(n + 1, i, -1));
    }
    Ok(poly_witness(&lhs, &rhs, "y"))
}

/// The literal coincidence `s^B_{ρ^B} = s^D_{ρ^B}`.
pub fn stair_so_odd_literal(n: usize) -> CheckOutcome {
    let w = rho(BracketKind::B, n);
    let lhs: Poly = weyl_char(CharFamily::B, &w, n)?;
    let rhs: Poly = weyl_char(CharFamily::D, &w, n)?;
    Ok(poly_witness(&lhs, &rhs, "y"))
}

/// The alternant at `ρ` against its expanded product form.
pub fn denom_product(kind: BracketKind, m: usize) -> CheckOutcome {
    let det: Poly = bracket_det(kind, &rho(kind, m), m)?;
    let closed: Poly = denominator_closed_form(kind, m);
    Ok(poly_witness(&det, &closed, "x"))
}
