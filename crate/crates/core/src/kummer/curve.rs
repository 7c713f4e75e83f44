use crate::algebra::QRatFunc;
use crate::{Error, Result};

/// A rationally parametrized curve `t ↦ (b_1(t), …, b_k(t))` in the torus G_m^k.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusCurve {
    coords: Vec<QRatFunc>,
}

impl TorusCurve {
    /// Rejects an empty tuple and identically zero coordinates (0 is not in G_m).
    pub fn new(coords: Vec<QRatFunc>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain("a torus curve needs at least one coordinate"));
        }
        if let Some(i) = coords.iter().position(|c| c.is_zero()) {
            return Err(Error::domain(format!(
                "coordinate {} is identically zero",
                i + 1
            )));
        }
        Ok(TorusCurve { coords })
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[QRatFunc] {
        &self.coords
    }

    /// Applies `g` to the parameter of every coordinate.
    pub fn reparametrize(&self, g: &QRatFunc) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.compose(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    /// The curve `t ↦ (∏_j b_j^{U_ij})_i` obtained by a torus automorphism.
    pub fn transform(&self, u: &[Vec<i64>]) -> Result<Self> {
        let field = crate::algebra::Rationals;
        let coords = u
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.coords)
                    .try_fold(QRatFunc::one(field), |acc, (&e, b)| Ok(acc.mul(&b.pow(e)?)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }
}

impl std::fmt::Display for TorusCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
