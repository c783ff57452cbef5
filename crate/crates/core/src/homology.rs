//! Kostant homology as Betti tables, graded characters and blocks.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characters::{dim_formal, weyl_char, CharFamily, DimGroup};
use crate::error::{Error, Result};
use crate::subsets::Subset;
use crate::weights::{beta_bcd, beta_type_a, internal_degree, BcdParams, Params, WeightVec};
use crate::{rat, Poly, Rational};

/// One summand of the homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTerm {
    pub subset: Subset,
    pub hom: i64,
    pub internal: i64,
    /// `[β¹, β²]` in type A, `[β]` otherwise.
    pub weights: Vec<WeightVec>,
    pub dim: Rational,
}

/// All terms sorted by `(hom, internal, subset)`, with per-degree totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub params: Params,
    pub terms: Vec<HomologyTerm>,
    /// `totals[i]` sums the terms in homological degree `i`.
    pub totals: Vec<Rational>,
    pub grand_total: Rational,
}

impl BettiTable {
    pub fn to_json(&self) -> Value {
        json!({
            "params": serde_json::to_value(&self.params).unwrap(),
            "terms": self.terms.iter().map(|t| json!({
                "S": t.subset,
                "hom": t.hom,
                "internal": t.internal,
                "weights": t.weights,
                "dim": t.dim.to_string(),
            })).collect::<Vec<_>>(),
            "totals": self.totals.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "grand_total": self.grand_total.to_string(),
        })
    }

    /// Term dimensions in table order.
    pub fn dims(&self) -> Vec<Rational> {
        self.terms.iter().map(|t| t.dim.clone()).collect()
    }
}

/// Variable prefix of the ring a parameter set's characters live in.
pub fn var_prefix(p: &Params) -> &'static str {
    match p {
        Params::A(_) => "x",
        Params::Bcd(_) => "y",
    }
}

/// Arity of the character ring: `t` plus `x_1..x_n` or `y_1..y_n`.
pub fn ring_arity(p: &Params) -> usize {
    match p {
        Params::A(a) => a.n + 1,
        Params::Bcd(b) => b.n() + 1,
    }
}

/// Subsets indexing the terms, in canonical order.
pub fn term_subsets(p: &Params) -> Vec<Subset> {
    match p {
        Params::A(a) => Subset::of_size(a.m(), a.n),
        Params::Bcd(b) => {
            let mut v: Vec<Subset> = Subset::all(b.m).filter(|s| b.component.admits(s)).collect();
            v.sort();
            v
        }
    }
}

/// The term indexed by `S`.
pub fn homology_term(p: &Params, s: &Subset) -> Result<HomologyTerm> {
    let internal = internal_degree(p, s);
    match p {
        Params::A(a) => {
            let (b1, b2) = beta_type_a(a, s)?;
            let dim = dim_formal::<Rational>(DimGroup::Gl, &b1)
                * dim_formal::<Rational>(DimGroup::Gl, &b2);
            Ok(HomologyTerm {
                subset: *s,
                hom: s.rank_a(a.n)?,
                internal,
                weights: vec![b1, b2],
                dim,
            })
        }
        Params::Bcd(b) => {
            if s.ambient() != b.m {
                return Err(Error::Invalid(format!(
                    "subset {s} is not inside [{}]",
                    b.m
                )));
            }
            let (beta, _) = beta_bcd(b, s);
            let hom = s.inverse().sum() - b.gamma_floor() * s.len() as i64;
            let dim = dim_formal::<Rational>(DimGroup::Gl, &beta);
            Ok(HomologyTerm {
                subset: *s,
                hom,
                internal,
                weights: vec![beta],
                dim,
            })
        }
    }
}

/// The Betti table of the parameter set.
pub fn homology_terms(p: &Params) -> Result<BettiTable> {
    p.validate()?;
    let mut terms = term_subsets(p)
        .iter()
        .map(|s| homology_term(p, s))
        .collect::<Result<Vec<_>>>()?;
    terms.sort_by_key(|a| (a.hom, a.internal, a.subset));
    let top = terms.iter().map(|t| t.hom).max().unwrap_or(0);
    let mut totals = vec![rat(0); top as usize + 1];
    for t in &terms {
        totals[t.hom as usize] += t.dim.clone();
    }
    let grand_total = totals.iter().fold(rat(0), |a, b| a + b);
    Ok(BettiTable {
        params: p.clone(),
        terms,
        totals,
        grand_total,
    })
}

/// Images of `t, x_1, ..., x_m` under the specialization to
/// `z = (y_1..y_n, y_1^{-1}..y_n^{-1}[, 1])`.
pub fn z_images(m: usize) -> Vec<Poly> {
    let n = m / 2;
    let ar = n + 1;
    let mut v = vec![Poly::var(ar, 0)];
    v.extend((1..=n).map(|i| Poly::var(ar, i)));
    v.extend((1..=n).map(|i| Poly::var_pow2(ar, i, -2)));
    if m % 2 == 1 {
        v.push(Poly::one(ar));
    }
    v
}

/// Specializes a polynomial in `t, x_1..x_m` to the `z`-vector.
pub fn at_z(p: &Poly, m: usize) -> Result<Poly> {
    p.substitute(&z_images(m))
}

/// Character of one term in the character ring (no `t`).
pub fn term_character(p: &Params, term: &HomologyTerm) -> Result<Poly> {
    match p {
        Params::A(a) => {
            let c1: Poly = weyl_char(CharFamily::A, &term.weights[0], a.n)?;
            let c2: Poly =
                weyl_char::<Rational>(CharFamily::A, &term.weights[1], a.k)?.with_arity(a.n + 1)?;
            Ok(&c1 * &c2)
        }
        Params::Bcd(b) => at_z(&weyl_char(CharFamily::A, &term.weights[0], b.m)?, b.m),
    }
}

/// Every term with its character, computed in parallel, in table order.
pub fn term_characters(p: &Params) -> Result<Vec<(HomologyTerm, Poly)>> {
    let table = homology_terms(p)?;
    table
        .terms
        .into_par_iter()
        .map(|t| {
            let c = term_character(p, &t)?;
            Ok((t, c))
        })
        .collect()
}

/// `Σ_S char(term_S) t^{hom(S)}`.
pub fn graded_character(p: &Params) -> Result<Poly> {
    let ar = ring_arity(p);
    let mut out = Poly::zero(ar);
    for (t, c) in term_characters(p)? {
        let mut e = vec![0; ar];
        e[0] = 2 * t.hom as i32;
        out += &c.mul_monomial(&e, &rat(1));
    }
    Ok(out)
}

/// The graded character at `t = 1`.
pub fn total_character(p: &Params) -> Result<Poly> {
    Ok(graded_character(p)?.set_one(0))
}

/// Positions whose slice of `S` keys the blocks: odd positions of `[n+k]`
/// in type A, `[m]_{1-ε}` otherwise.
pub fn block_positions(p: &Params) -> Subset {
    match p {
        Params::A(a) => Subset::full(a.m()).odd_slice(),
        Params::Bcd(b) => Subset::full(b.m).slice(1 - b.eps()),
    }
}

fn block_key(p: &Params, s: &Subset) -> Subset {
    match p {
        Params::A(_) => s.odd_slice(),
        Params::Bcd(b) => s.slice(1 - b.eps()),
    }
}

/// One equidistribution block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub key: Subset,
    pub character: Poly,
    pub dim: Rational,
}

/// All blocks, keyed by every subset of the block positions, in canonical
/// key order.
pub fn blocks(p: &Params) -> Result<Vec<Block>> {
    let ar = ring_arity(p);
    let pos = block_positions(p);
    let mut keys: Vec<Subset> = Subset::all(pos.ambient())
        .filter(|t| t.is_subset_of(&pos))
        .collect();
    keys.sort();
    let mut out: Vec<Block> = keys
        .into_iter()
        .map(|key| Block {
            key,
            character: Poly::zero(ar),
            dim: rat(0),
        })
        .collect();
    for (t, c) in term_characters(p)? {
        let key = block_key(p, &t.subset);
        let b = out
            .iter_mut()
            .find(|b| b.key == key)
            .expect("every key is enumerated");
        b.character += &c;
        b.dim += t.dim;
    }
    Ok(out)
}

/// The block keyed by `T`.
pub fn restricted_character(p: &Params, t: &Subset) -> Result<Poly> {
    let pos = block_positions(p);
    if t.ambient() != pos.ambient() || !t.is_subset_of(&pos) {
        return Err(Error::Invalid(format!(
            "block key {t} must be a subset of {pos}"
        )));
    }
    let ar = ring_arity(p);
    let mut out = Poly::zero(ar);
    for s in term_subsets(p)
        .into_iter()
        .filter(|s| block_key(p, s) == *t)
    {
        out += &term_character(p, &homology_term(p, &s)?)?;
    }
    Ok(out)
}

/// The same parameters with both spin components.
pub fn pin_level(p: &Params) -> Params {
    match p {
        Params::Bcd(b) => Params::Bcd(BcdParams {
            component: Default::default(),
            ..b.clone()
        }),
        a => a.clone(),
    }
}
