use crate::error::{Error, Result};
use crate::linalg::{solve_linear_system, Matrix};
use crate::linmap::LinMap;
use crate::scalar::Field;

use super::{Algebra, Coalgebra};

/// A linear map `C → A` viewed in the convolution algebra `Hom(C, A)`.
#[derive(Clone, Debug)]
pub struct ConvElement<'a, F> {
    pub coalgebra: &'a Coalgebra<F>,
    pub algebra: &'a Algebra<F>,
    pub map: LinMap<F>,
}

impl<'a, F: Field> ConvElement<'a, F> {
    pub fn new(coalgebra: &'a Coalgebra<F>, algebra: &'a Algebra<F>, map: LinMap<F>) -> Result<Self> {
        if map.source() != coalgebra.dim() || map.target() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map is {}→{}, expected {}→{}",
                map.source(),
                map.target(),
                coalgebra.dim(),
                algebra.dim()
            )));
        }
        Ok(ConvElement { coalgebra, algebra, map })
    }

    /// The convolution unit `η∘ε`.
    pub fn unit(coalgebra: &'a Coalgebra<F>, algebra: &'a Algebra<F>) -> Self {
        let map = LinMap::from_fn(coalgebra.dim(), algebra.dim(), |i| {
            algebra
                .unit()
                .iter()
                .map(|u| u.clone() * coalgebra.counit()[i].clone())
                .collect()
        });
        ConvElement { coalgebra, algebra, map }
    }

    fn same_domains(&self, other: &Self) -> bool {
        (std::ptr::eq(self.coalgebra, other.coalgebra) || self.coalgebra == other.coalgebra)
            && (std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra)
    }

    pub fn is_unit(&self) -> bool {
        self.map == Self::unit(self.coalgebra, self.algebra).map
    }
}

/// `(f*g)(c) = Σ f(c₁)g(c₂)`.
pub fn convolve<'a, F: Field>(f: &ConvElement<'a, F>, g: &ConvElement<'a, F>) -> Result<ConvElement<'a, F>> {
    if !f.same_domains(g) {
        return Err(Error::ConvolutionMismatch);
    }
    let (c, a) = (f.coalgebra, f.algebra);
    let na = a.dim();
    let cols = (0..c.dim())
        .map(|i| {
            let mut out = vec![F::zero(); na];
            for (c1, c2, coef) in c.coproduct(i) {
                for (x, fx) in f.map.column(c1) {
                    for (y, gy) in g.map.column(c2) {
                        a.mult()
                            .accumulate_column(x * na + y, &(coef.clone() * fx.clone() * gy.clone()), &mut out);
                    }
                }
            }
            out
        })
        .collect();
    Ok(ConvElement {
        coalgebra: c,
        algebra: a,
        map: LinMap::from_columns(na, cols),
    })
}

/// The two-sided convolution inverse.
///
/// `g ↦ f*g` and `g ↦ g*f` are linear in `g`; both equations `f*g = η∘ε`
/// and `g*f = η∘ε` are stacked into one system and solved exactly.
pub fn convolution_inverse<'a, F: Field>(f: &ConvElement<'a, F>) -> Result<ConvElement<'a, F>> {
    let (c, a) = (f.coalgebra, f.algebra);
    let (nc, na) = (c.dim(), a.dim());
    let unknowns = nc * na;
    let mut system = Matrix::zeros(2 * nc * na, unknowns);
    let mut rhs = vec![F::zero(); 2 * nc * na];
    for i in 0..nc {
        for (k, u) in a.unit().iter().enumerate() {
            let target = u.clone() * c.counit()[i].clone();
            rhs[i * na + k] = target.clone();
            rhs[nc * na + i * na + k] = target;
        }
        for (c1, c2, coef) in c.coproduct(i) {
            // f*g: unknown g(e_c2)[y]
            for (x, fx) in f.map.column(c1) {
                for y in 0..na {
                    for (k, m) in a.mult().column(x * na + y) {
                        system[(i * na + k, c2 * na + y)] += coef.clone() * fx.clone() * m.clone();
                    }
                }
            }
            // g*f: unknown g(e_c1)[x]
            for (y, fy) in f.map.column(c2) {
                for x in 0..na {
                    for (k, m) in a.mult().column(x * na + y) {
                        system[(nc * na + i * na + k, c1 * na + x)] += coef.clone() * fy.clone() * m.clone();
                    }
                }
            }
        }
    }
    let solution = solve_linear_system(&system, &rhs);
    let x = solution.particular().ok_or(Error::NoInverse)?;
    let cols = (0..nc).map(|i| x[i * na..(i + 1) * na].to_vec()).collect();
    Ok(ConvElement {
        coalgebra: c,
        algebra: a,
        map: LinMap::from_columns(na, cols),
    })
}
