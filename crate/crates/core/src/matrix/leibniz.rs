use crate::error::{Error, Result};
use crate::ring::{RingContext, RingValue};

/// Largest size accepted by the permutation-sum determinant.
pub const LEIBNIZ_CAP: usize = 9;

/// `sum_sigma sgn(sigma) prod_i a(i, sigma(i))`, walking permutations depth-first so
/// that partial products are shared. Branches through zero entries are skipped.
pub(crate) fn det<'a, F>(ctx: &RingContext, n: usize, entry: F) -> Result<RingValue>
where
    F: Fn(usize, usize) -> &'a RingValue,
{
    if n > LEIBNIZ_CAP {
        return Err(Error::OracleCapExceeded {
            size: n,
            cap: LEIBNIZ_CAP,
        });
    }
    if n == 0 {
        return Ok(ctx.one());
    }
    let mut walk = Walk {
        n,
        entry,
        even: ctx.zero(),
        odd: ctx.zero(),
    };
    walk.descend(0, 0, &ctx.one(), 0)?;
    walk.even.sub(&walk.odd)
}

struct Walk<F> {
    n: usize,
    entry: F,
    even: RingValue,
    odd: RingValue,
}

impl<'a, F> Walk<F>
where
    F: Fn(usize, usize) -> &'a RingValue,
{
    fn descend(
        &mut self,
        row: usize,
        used: u32,
        partial: &RingValue,
        inversions: u32,
    ) -> Result<()> {
        for col in 0..self.n {
            if used & (1 << col) != 0 {
                continue;
            }
            let e = (self.entry)(row, col);
            if e.is_zero() {
                continue;
            }
            // earlier rows that took a larger column each form one inversion
            let inv = inversions + (used >> (col + 1)).count_ones();
            let product = partial.mul(e)?;
            if row + 1 == self.n {
                if inv.is_multiple_of(2) {
                    self.even = self.even.add(&product)?;
                } else {
                    self.odd = self.odd.add(&product)?;
                }
            } else {
                self.descend(row + 1, used | (1 << col), &product, inv)?;
            }
        }
        Ok(())
    }
}
