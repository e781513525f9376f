use super::SquareMatrix;
use crate::error::{Error, Result};

/// The four Peirce components of `x` relative to an idempotent `p`,
/// with `q = 1 - p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    pub p: SquareMatrix,
    pub pxp: SquareMatrix,
    pub pxq: SquareMatrix,
    pub qxp: SquareMatrix,
    pub qxq: SquareMatrix,
}

impl BlockView {
    pub fn recompose(&self) -> SquareMatrix {
        &(&(&self.pxp + &self.pxq) + &self.qxp) + &self.qxq
    }

    /// Upper triangular relative to `p`: the `(1-p) x p` block vanishes.
    pub fn is_upper_triangular(&self) -> bool {
        self.qxp.is_zero()
    }
}

pub fn peirce_blocks(x: &SquareMatrix, p: &SquareMatrix) -> Result<BlockView> {
    x.check_conformable(p)?;
    if !p.is_idempotent() {
        return Err(Error::Precondition("p is not idempotent".into()));
    }
    let q = &SquareMatrix::identity(p.ring(), p.dim()) - p;
    Ok(BlockView {
        pxp: &(p * x) * p,
        pxq: &(p * x) * &q,
        qxp: &(&q * x) * p,
        qxq: &(&q * x) * &q,
        p: p.clone(),
    })
}
