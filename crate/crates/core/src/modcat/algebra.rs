//! A bound quiver together with its path bases and those of its opposite.

use std::sync::Arc;

use crate::error::Result;
use crate::par::Exec;
use crate::quiver::{path_basis, BoundQuiver, PathBasis};

use super::module::Module;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct Algebra {
    pub quiver: Arc<BoundQuiver>,
    pub basis: Arc<PathBasis>,
    pub op_quiver: Arc<BoundQuiver>,
    pub op_basis: Arc<PathBasis>,
    pub seed: u64,
    pub exec: Exec,
}

impl Algebra {
    pub fn new(bq: &BoundQuiver) -> Result<Self> {
        let op = bq.opposite();
        Ok(Algebra {
            basis: Arc::new(path_basis(bq)?),
            op_basis: Arc::new(path_basis(&op)?),
            quiver: Arc::new(bq.clone()),
            op_quiver: Arc::new(op),
            seed: DEFAULT_SEED,
            exec: Exec::default(),
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    /// The same algebra seen from the opposite side.
    pub fn opposite(&self) -> Algebra {
        Algebra {
            quiver: self.op_quiver.clone(),
            basis: self.op_basis.clone(),
            op_quiver: self.quiver.clone(),
            op_basis: self.basis.clone(),
            seed: self.seed,
            exec: self.exec,
        }
    }

    pub fn n(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.total_dim()
    }

    pub fn simple(&self, x: usize) -> Module {
        Module::simple(self.quiver.clone(), x)
    }

    /// `P_x = R(-, x)`; an arrow `a: z -> w` acts by `u -> a*u`.
    pub fn projective(&self, x: usize) -> Module {
        let pb = &self.basis;
        let dims = (0..self.n()).map(|z| pb.dim(z, x)).collect();
        let mats = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let e = pb.path_element(a.source, a.target, &[i]);
                pb.left_mul_matrix(a.source, a.target, x, &e)
            })
            .collect();
        Module {
            base: self.quiver.clone(),
            dims,
            mats,
        }
    }

    /// `I_x = D(P_x)` for the projective of the opposite algebra.
    pub fn injective(&self, x: usize) -> Module {
        self.opposite().projective(x).dual(self.quiver.clone())
    }

    /// Dual of a module, as a module over the opposite algebra.
    pub fn dual(&self, m: &Module) -> Module {
        m.dual(self.op_quiver.clone())
    }
}
