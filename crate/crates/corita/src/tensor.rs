//! Balanced tensor carriers `M ⊗_R N` as quotients of `M ⊗_k N`.

use crate::error::{Error, Result};
use crate::exactlin::{quotient_by, Field, Mat, Quotient, SpanBuilder};
use crate::par;

/// The carrier of `M ⊗_R N` together with the quotient data that links it to
/// the flat space `M ⊗_k N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Balanced {
    pub quotient: Quotient,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl Balanced {
    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn flat_dim(&self) -> usize {
        self.left_dim * self.right_dim
    }

    /// `carrier -> M ⊗_k N`
    pub fn section(&self) -> &Mat {
        &self.quotient.section
    }

    /// `M ⊗_k N -> carrier`
    pub fn projection(&self) -> &Mat {
        &self.quotient.projection
    }

    /// Restricts a map defined on `M ⊗_k N` to the carrier.
    pub fn descend(&self, flat: &Mat) -> Mat {
        flat.mul(self.section())
    }

    /// Pushes a map landing in `M ⊗_k N` down to the carrier.
    pub fn ascend(&self, into_flat: &Mat) -> Mat {
        self.projection().mul(into_flat)
    }

    /// Whether a map on `M ⊗_k N` vanishes on the balancing relations.
    pub fn respects(&self, flat: &Mat) -> bool {
        flat.mul(&self.quotient.relations.inclusion()).is_zero()
    }
}

/// `M ⊗_R N` where `right[i]` is the action of the `i`-th basis element of `R`
/// on `M` and `left[i]` its action on `N`.
pub fn balanced(field: Field, m: usize, n: usize, right: &[Mat], left: &[Mat]) -> Result<Balanced> {
    if right.len() != left.len() {
        return Err(Error::ActionMismatch(format!(
            "{} right generators against {} left generators",
            right.len(),
            left.len()
        )));
    }
    if right.iter().any(|r| r.rows() != m || r.cols() != m)
        || left.iter().any(|l| l.rows() != n || l.cols() != n)
    {
        return Err(Error::Dimension("action matrix of the wrong size".into()));
    }
    let ambient = m * n;
    let idx: Vec<usize> = (0..right.len()).collect();
    let parts = par::map(&idx, |&i| {
        let mut span = SpanBuilder::new(field, ambient);
        for a in 0..m {
            for b in 0..n {
                if span.dim() == ambient {
                    return span;
                }
                let mut row = vec![field.zero(); ambient];
                for x in 0..m {
                    let c = right[i].get(x, a);
                    if !c.is_zero() {
                        row[x * n + b] = &row[x * n + b] + c;
                    }
                }
                for y in 0..n {
                    let c = left[i].get(y, b);
                    if !c.is_zero() {
                        row[a * n + y] = &row[a * n + y] - c;
                    }
                }
                span.push(row);
            }
        }
        span
    });
    let mut span = SpanBuilder::new(field, ambient);
    for part in parts {
        span.merge(part);
    }
    Ok(Balanced { quotient: quotient_by(ambient, &span.finish())?, left_dim: m, right_dim: n })
}
