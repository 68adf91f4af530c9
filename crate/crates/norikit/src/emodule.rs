//! Objects of the diagram category C(T): modules over an `EndAlgebra`.
//! The underlying R-module is a presentation (free when the relation
//! matrix is empty) and each algebra basis element acts by a matrix on
//! generator coordinates, well defined modulo the relations.

use std::sync::Arc;

use crate::end_algebra::EndAlgebra;
use crate::error::{Error, Result};
use crate::exact_linalg::{ExactMatrix, Scalar};
use crate::fgmod::Presentation;

#[derive(Debug, Clone)]
pub struct EModule {
    algebra: Arc<EndAlgebra>,
    underlying: Presentation,
    action: Vec<ExactMatrix>,
}

impl EModule {
    /// Builds and validates a module: the unit combination must act as
    /// the identity and the action must respect the structure constants,
    /// both modulo the relations of the underlying presentation.
    pub fn new(
        algebra: Arc<EndAlgebra>,
        underlying: Presentation,
        action: Vec<ExactMatrix>,
    ) -> Result<Self> {
        let m = EModule { algebra, underlying, action };
        m.validate()?;
        Ok(m)
    }

    pub fn free(algebra: Arc<EndAlgebra>, rank: usize, action: Vec<ExactMatrix>) -> Result<Self> {
        let ring = algebra.ring();
        Self::new(algebra, Presentation::free(ring, rank), action)
    }

    pub fn validate(&self) -> Result<()> {
        let dim = self.algebra.dim();
        let d = self.underlying.generators();
        if self.action.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a dimension-{dim} algebra",
                self.action.len()
            )));
        }
        for (i, a) in self.action.iter().enumerate() {
            if a.rows() != d || a.cols() != d {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {i} is {}x{}, expected {d}x{d}",
                    a.rows(),
                    a.cols()
                )));
            }
            if a.ring() != self.algebra.ring() {
                return Err(Error::RingMismatch {
                    expected: self.algebra.ring(),
                    found: a.ring(),
                });
            }
        }
        // actions must descend to the quotient
        for (i, a) in self.action.iter().enumerate() {
            let moved = a * self.underlying.relations();
            for j in 0..moved.cols() {
                if !self.underlying.is_zero_element(&moved.column(j)) {
                    return Err(Error::InvalidRepresentation(format!(
                        "action of basis element {i} does not preserve the relations"
                    )));
                }
            }
        }
        // unit acts as the identity
        let unit_action = self.act(self.algebra.unit_coords());
        let id = ExactMatrix::identity(self.algebra.ring(), d);
        if !self.underlying.matrices_congruent(&unit_action, &id) {
            return Err(Error::InvalidRepresentation(
                "unit combination does not act as the identity".into(),
            ));
        }
        // structure constants are respected
        for i in 0..dim {
            for j in 0..dim {
                let lhs = &self.action[i] * &self.action[j];
                let rhs = self.act(self.algebra.structure_coords(i, j));
                if !self.underlying.matrices_congruent(&lhs, &rhs) {
                    return Err(Error::InvalidRepresentation(format!(
                        "action does not respect the product of basis elements {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<EndAlgebra> {
        &self.algebra
    }

    pub fn underlying(&self) -> &Presentation {
        &self.underlying
    }

    /// Generator count of the underlying presentation.
    pub fn rank(&self) -> usize {
        self.underlying.generators()
    }

    pub fn is_free(&self) -> bool {
        self.underlying.is_free()
    }

    pub fn action(&self, i: usize) -> &ExactMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[ExactMatrix] {
        &self.action
    }

    /// The action of an algebra element given by coordinates.
    pub fn act(&self, coords: &[Scalar]) -> ExactMatrix {
        assert_eq!(coords.len(), self.algebra.dim());
        let d = self.rank();
        let mut out = ExactMatrix::zeros(self.algebra.ring(), d, d);
        for (c, a) in coords.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&a.scale(c));
            }
        }
        out
    }

    /// Is `f` a module morphism from `self` to `other`? The condition
    /// `f . act_self(b_i) = act_other(b_i) . f` is tested modulo the
    /// target relations, for every basis index.
    pub fn is_morphism(&self, other: &EModule, f: &ExactMatrix) -> Result<()> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) && self.algebra.dim() != other.algebra.dim()
        {
            return Err(Error::DimensionMismatch("modules over different algebras".into()));
        }
        if f.rows() != other.rank() || f.cols() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                other.rank(),
                self.rank()
            )));
        }
        for i in 0..self.algebra.dim() {
            let lhs = f * self.action(i);
            let rhs = other.action(i) * f;
            if !other.underlying.matrices_congruent(&lhs, &rhs) {
                return Err(Error::NotAMorphism(i));
            }
        }
        Ok(())
    }
}
