use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// Largest matrix the determinant accepts unless told otherwise.
pub const DEFAULT_MAX_DET_SIZE: usize = 12;

/// A dense row-major matrix of Laurent polynomials over a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<C> {
    rows: usize,
    cols: usize,
    arity: usize,
    entries: Vec<LaurentPoly<C>>,
}

impl<C: Scalar> PolyMatrix<C> {
    /// Builds a matrix from rows. All entries must share one arity.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly<C>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let arity = rows
            .first()
            .and_then(|x| x.first())
            .map(|p| p.arity())
            .unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Invalid(format!(
                    "ragged rows: {} vs {}",
                    row.len(),
                    c
                )));
            }
            for p in row {
                if p.arity() != arity {
                    return Err(Error::ArityMismatch {
                        left: arity,
                        right: p.arity(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            arity,
            entries,
        })
    }

    /// Matrix with entries `f(i, j)` in the ring of the given arity, which
    /// also covers the empty matrix.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        arity: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly<C>,
    ) -> Result<Self> {
        let rows: Vec<Vec<_>> = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        let mut m = Self::from_rows(rows)?;
        if m.entries.is_empty() {
            m.arity = arity;
        } else if m.arity != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: m.arity,
            });
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<C> {
        &self.entries[i * self.cols + j]
    }

    /// Determinant with the default size bound.
    pub fn determinant(&self) -> Result<LaurentPoly<C>> {
        self.determinant_bounded(DEFAULT_MAX_DET_SIZE)
    }

    /// Determinant by Laplace expansion along rows, memoized over column
    /// subsets: entry `mask` holds the minor on the first `popcount(mask)`
    /// rows and the columns in `mask`.
    pub fn determinant_bounded(&self, bound: usize) -> Result<LaurentPoly<C>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let s = self.rows;
        if s > bound {
            return Err(Error::TooLarge { size: s, bound });
        }
        if s == 0 {
            return Ok(LaurentPoly::one(self.arity));
        }
        let full = (1usize << s) - 1;
        let mut minors: Vec<Option<LaurentPoly<C>>> = vec![None; full + 1];
        minors[0] = Some(LaurentPoly::one(self.arity));
        for mask in 1..=full {
            let r = mask.count_ones() as usize - 1;
            let mut acc = LaurentPoly::zero(self.arity);
            for j in 0..s {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = self.get(r, j);
                if entry.is_zero() {
                    continue;
                }
                let Some(sub) = &minors[mask & !(1 << j)] else {
                    continue;
                };
                let prod = entry * sub;
                // Sign is the parity of the columns of `mask` to the right of `j`.
                if (mask >> (j + 1)).count_ones() % 2 == 0 {
                    acc += &prod;
                } else {
                    acc -= &prod;
                }
            }
            if !acc.is_zero() {
                minors[mask] = Some(acc);
            }
        }
        Ok(minors[full]
            .take()
            .unwrap_or_else(|| LaurentPoly::zero(self.arity)))
    }
}
