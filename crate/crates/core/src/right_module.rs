//! Right modules over a Lie algebra, given by action constants.

use num_traits::One;

use crate::algebra::{Algebra, AxiomReport};
use crate::error::{Error, Result};
use crate::linear::Vector;
use crate::scalar::Q;

/// A right module `M` over an algebra of dimension `algebra_dim`, with
/// `[e_v, x_i] = action(v, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    names: Vec<String>,
    algebra_dim: usize,
    action: Vec<Vec<Vector>>,
}

impl RightModule {
    pub fn trivial<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        algebra_dim: usize,
    ) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let m = names.len();
        Self {
            names,
            algebra_dim,
            action: vec![vec![Vector::zero(); algebra_dim]; m],
        }
    }

    /// Builds a module from sparse entries `(v, i, [e_v, x_i])`.
    pub fn from_entries<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        algebra_dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let mut module = Self::trivial(names, algebra_dim);
        let m = module.dim();
        for (v, i, image) in entries {
            if v >= m {
                return Err(Error::IndexOutOfRange { index: v, dim: m });
            }
            if i >= algebra_dim {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: algebra_dim,
                });
            }
            if let Some(top) = image.max_index().filter(|&t| t >= m) {
                return Err(Error::IndexOutOfRange { index: top, dim: m });
            }
            module.action[v][i].add_scaled(&image, &Q::one());
        }
        Ok(module)
    }

    /// The algebra acting on itself by right multiplication.
    pub fn adjoint(g: &Algebra) -> Self {
        let n = g.dim();
        Self {
            names: g.names().to_vec(),
            algebra_dim: n,
            action: (0..n)
                .map(|v| (0..n).map(|i| g.bracket_basis(v, i).clone()).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn act_basis(&self, v: usize, i: usize) -> &Vector {
        &self.action[v][i]
    }

    pub fn act(&self, m: &Vector, x: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (v, a) in m {
            for (i, b) in x {
                out.add_scaled(&self.action[*v][*i], &(a * b));
            }
        }
        out
    }

    /// `[m, x_i]` for a general `m`.
    pub fn act_right_basis(&self, m: &Vector, i: usize) -> Vector {
        m.apply(|v| self.action[*v][i].clone())
    }

    /// Non-zero action entries in `(v, i)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.action.iter().enumerate().flat_map(|(v, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(move |(i, w)| (v, i, w))
        })
    }

    /// Checks `[m,[x,y]] = [[m,x],y] - [[m,y],x]` on basis elements.
    pub fn check_axiom(&self, g: &Algebra) -> AxiomReport {
        let mut report = AxiomReport::default();
        if g.dim() != self.algebra_dim {
            return report;
        }
        let n = g.dim();
        for v in 0..self.dim() {
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.act(&Vector::basis(v), g.bracket_basis(i, j));
                    let rhs = &self.act_right_basis(&self.action[v][i], j)
                        - &self.act_right_basis(&self.action[v][j], i);
                    report.check("right-module", &[v, i, j], lhs, rhs);
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn adjoint_of_lie_is_module() {
        for g in [catalog::heisenberg(), catalog::sl2(), catalog::solvable2()] {
            assert!(RightModule::adjoint(&g).check_axiom(&g).passed());
        }
    }

    #[test]
    fn standard_sl2_module() {
        let g = catalog::sl2();
        let m = catalog::sl2_standard_module();
        assert!(m.check_axiom(&g).passed());
    }

    #[test]
    fn left_action_convention_is_rejected() {
        // Using rho(x) instead of -rho(x) turns a right module into a left one.
        let g = catalog::sl2();
        let right = catalog::sl2_standard_module();
        let flipped = RightModule::from_entries(
            ["p", "q"],
            3,
            right
                .entries()
                .map(|(v, i, w)| (v, i, -w))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(!flipped.check_axiom(&g).passed());
    }
}
