//! Dualization of endomorphism algebras to coalgebras, the translation
//! between modules and comodules, translation of morphisms, and filtered
//! colimits of coalgebras along subdiagram chains.
//!
//! Convention, fixed once and used everywhere: LEFT modules correspond to
//! the coaction `x -> sum_i b_i^v (x) b_i . x`, and the comultiplication
//! constants are the transposed structure constants `d[l][i][j] = c[i][j][l]`.

use crate::emodule::EModule;
use crate::end_algebra::EndAlgebra;
use crate::error::{Error, Result};
use crate::exact_linalg::{ExactMatrix, Ring, Scalar};

/// Dual structure constants `Delta(b_l^v) = sum_{i,j} d[l][i][j] b_i^v (x) b_j^v`
/// and counit coordinates `eps(b_l^v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    ring: Ring,
    rank: usize,
    delta: Vec<Vec<Vec<Scalar>>>,
    epsilon: Vec<Scalar>,
}

impl Coalgebra {
    pub fn new(
        ring: Ring,
        rank: usize,
        delta: Vec<Vec<Vec<Scalar>>>,
        epsilon: Vec<Scalar>,
    ) -> Result<Self> {
        let c = Coalgebra { ring, rank, delta, epsilon };
        c.validate()?;
        Ok(c)
    }

    /// Coassociativity and the two counit identities, checked exactly.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank;
        if self.delta.len() != n || self.epsilon.len() != n {
            return Err(Error::DimensionMismatch("delta/epsilon size mismatch".into()));
        }
        for d in &self.delta {
            if d.len() != n || d.iter().any(|row| row.len() != n) {
                return Err(Error::DimensionMismatch("delta tensor is not rank^3".into()));
            }
        }
        let zero = Scalar::zero(self.ring);
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let lhs = (0..n).fold(zero.clone(), |acc, l| {
                            &acc + &(&self.delta[m][l][k] * &self.delta[l][i][j])
                        });
                        let rhs = (0..n).fold(zero.clone(), |acc, l| {
                            &acc + &(&self.delta[m][i][l] * &self.delta[l][j][k])
                        });
                        if lhs != rhs {
                            return Err(Error::InvalidRepresentation(format!(
                                "coassociativity fails at ({m}, {i}, {j}, {k})"
                            )));
                        }
                    }
                }
            }
        }
        for m in 0..n {
            for j in 0..n {
                let left = (0..n).fold(zero.clone(), |acc, i| {
                    &acc + &(&self.epsilon[i] * &self.delta[m][i][j])
                });
                let right = (0..n).fold(zero.clone(), |acc, i| {
                    &acc + &(&self.epsilon[i] * &self.delta[m][j][i])
                });
                let expected = if m == j { Scalar::one(self.ring) } else { zero.clone() };
                if left != expected || right != expected {
                    return Err(Error::InvalidRepresentation(format!(
                        "counit law fails at ({m}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn delta(&self, l: usize, i: usize, j: usize) -> &Scalar {
        &self.delta[l][i][j]
    }

    pub fn epsilon(&self) -> &[Scalar] {
        &self.epsilon
    }

    /// `Delta` applied to a coordinate vector, as a rank x rank matrix of
    /// tensor coefficients: `out[i][j] = sum_l x_l d[l][i][j]`.
    pub fn comultiply(&self, x: &[Scalar]) -> ExactMatrix {
        assert_eq!(x.len(), self.rank);
        ExactMatrix::from_fn(self.ring, self.rank, self.rank, |i, j| {
            (0..self.rank).fold(Scalar::zero(self.ring), |acc, l| {
                &acc + &(&x[l] * &self.delta[l][i][j])
            })
        })
    }

    pub fn counit(&self, x: &[Scalar]) -> Scalar {
        assert_eq!(x.len(), self.rank);
        x.iter()
            .zip(&self.epsilon)
            .fold(Scalar::zero(self.ring), |acc, (a, b)| &acc + &(a * b))
    }

    /// Sparse triples `(l, i, j, value)` in lexicographic order.
    pub fn delta_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for l in 0..self.rank {
            for i in 0..self.rank {
                for j in 0..self.rank {
                    if !self.delta[l][i][j].is_zero() {
                        out.push((l, i, j, self.delta[l][i][j].clone()));
                    }
                }
            }
        }
        out
    }

    /// Is `f` (matrix target_rank x source_rank) a coalgebra morphism
    /// `self -> target`? Checks `Delta' . f = (f (x) f) . Delta` and
    /// `eps' . f = eps` on every basis element.
    pub fn is_morphism(&self, target: &Coalgebra, f: &ExactMatrix) -> Result<()> {
        if f.rows() != target.rank || f.cols() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "coalgebra morphism matrix is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                target.rank,
                self.rank
            )));
        }
        for l in 0..self.rank {
            let mut x = vec![Scalar::zero(self.ring); self.rank];
            x[l] = Scalar::one(self.ring);
            let fx = f.column(l);
            let lhs = target.comultiply(&fx);
            // (f (x) f) Delta(b_l^v) = f . Delta_coeffs . f^T
            let rhs = &(f * &self.comultiply(&x)) * &f.transpose();
            if lhs != rhs {
                return Err(Error::NotACoalgebraMorphism(format!(
                    "comultiplication square fails at basis element {l}"
                )));
            }
            if target.counit(&fx) != self.epsilon[l] {
                return Err(Error::NotACoalgebraMorphism(format!(
                    "counit triangle fails at basis element {l}"
                )));
            }
        }
        Ok(())
    }
}

/// The dual coalgebra of End(T): transposed structure constants and the
/// unit coordinates as counit. Valid over Q always, and over Z because
/// the algebra basis is a free saturated lattice basis.
pub fn dualize(e: &EndAlgebra) -> Coalgebra {
    let n = e.dim();
    let mut delta = vec![vec![vec![Scalar::zero(e.ring()); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                delta[l][i][j] = e.structure_constant(i, j, l).clone();
            }
        }
    }
    let c = Coalgebra { ring: e.ring(), rank: n, delta, epsilon: e.unit_coords().to_vec() };
    c.validate()
        .expect("dual of an associative unital algebra always satisfies the coalgebra laws");
    c
}

/// A comodule over a coalgebra, stored through its coaction coefficient
/// matrices: `rho(x) = sum_i b_i^v (x) A_i x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Coalgebra,
    rank: usize,
    coeff: Vec<ExactMatrix>,
}

impl Comodule {
    pub fn new(coalgebra: Coalgebra, rank: usize, coeff: Vec<ExactMatrix>) -> Result<Self> {
        let c = Comodule { coalgebra, rank, coeff };
        c.validate()?;
        Ok(c)
    }

    /// Coassociativity of the coaction (`A_i A_j` decomposes via
    /// `d[l][i][j]`) and the counit law (`sum_i eps_i A_i = id`).
    pub fn validate(&self) -> Result<()> {
        let n = self.coalgebra.rank();
        let ring = self.coalgebra.ring();
        if self.coeff.len() != n {
            return Err(Error::DimensionMismatch("one coefficient matrix per basis element".into()));
        }
        for a in &self.coeff {
            if a.rows() != self.rank || a.cols() != self.rank {
                return Err(Error::DimensionMismatch("coefficient matrix shape".into()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = &self.coeff[i] * &self.coeff[j];
                let mut rhs = ExactMatrix::zeros(ring, self.rank, self.rank);
                for l in 0..n {
                    let d = self.coalgebra.delta(l, i, j);
                    if !d.is_zero() {
                        rhs = rhs.add(&self.coeff[l].scale(d));
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidRepresentation(format!(
                        "coaction coassociativity fails at ({i}, {j})"
                    )));
                }
            }
        }
        let mut unit = ExactMatrix::zeros(ring, self.rank, self.rank);
        for (e, a) in self.coalgebra.epsilon().iter().zip(&self.coeff) {
            if !e.is_zero() {
                unit = unit.add(&a.scale(e));
            }
        }
        if !unit.is_identity() {
            return Err(Error::InvalidRepresentation("comodule counit law fails".into()));
        }
        Ok(())
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coefficient(&self, i: usize) -> &ExactMatrix {
        &self.coeff[i]
    }

    pub fn coefficients(&self) -> &[ExactMatrix] {
        &self.coeff
    }

    /// Comodule-side morphism condition: `f A_i^M = A_i^N f` for all `i`.
    /// This is coded independently of [`EModule::is_morphism`] and must
    /// agree with it under the translation.
    pub fn is_morphism(&self, other: &Comodule, f: &ExactMatrix) -> Result<()> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::CoalgebraMismatch("comodules over different coalgebras".into()));
        }
        if f.rows() != other.rank || f.cols() != self.rank {
            return Err(Error::DimensionMismatch("comodule morphism shape".into()));
        }
        for i in 0..self.coalgebra.rank() {
            if &(f * &self.coeff[i]) != &(&other.coeff[i] * f) {
                return Err(Error::NotAMorphism(i));
            }
        }
        Ok(())
    }
}

/// The translation `x -> sum_i b_i^v (x) b_i . x`: coefficient matrices
/// are the action matrices. Requires a free underlying module, which is
/// where the duality lives.
pub fn module_to_comodule(m: &EModule) -> Result<Comodule> {
    if !m.is_free() {
        return Err(Error::InvalidRepresentation(
            "module-comodule translation needs a free underlying module".into(),
        ));
    }
    Comodule::new(dualize(m.algebra()), m.rank(), m.actions().to_vec())
}

/// Inverse translation: the coefficient matrices become the action.
/// The comodule must live over the dual of `e`.
pub fn comodule_to_module(
    c: &Comodule,
    e: &std::sync::Arc<EndAlgebra>,
) -> Result<EModule> {
    if c.coalgebra() != &dualize(e) {
        return Err(Error::CoalgebraMismatch(
            "comodule does not live over the dual of the given algebra".into(),
        ));
    }
    EModule::free(std::sync::Arc::clone(e), c.rank(), c.coefficients().to_vec())
}

/// Translates a module morphism candidate to the comodule side. The two
/// sides are checked independently and must agree; on success the same
/// matrix is returned, tagged as a comodule morphism.
pub fn translate_morphism(
    f: &ExactMatrix,
    m: &EModule,
    n: &EModule,
) -> Result<ExactMatrix> {
    let module_side = m.is_morphism(n, f);
    let cm = module_to_comodule(m)?;
    let cn = module_to_comodule(n)?;
    let comodule_side = cm.is_morphism(&cn, f);
    match (module_side, comodule_side) {
        (Ok(()), Ok(())) => Ok(f.clone()),
        (Err(e), Err(_)) => Err(e),
        (a, b) => unreachable!("module and comodule morphism checks disagree: {a:?} vs {b:?}"),
    }
}

/// Dual of an algebra homomorphism `h: E_big -> E_small` (a coordinate
/// matrix): the transpose, as a coalgebra morphism
/// `dualize(E_small) -> dualize(E_big)`. The coalgebra-morphism squares
/// are checked; a failure signals an upstream bug.
pub fn dual_of_algebra_hom(
    h: &ExactMatrix,
    big: &EndAlgebra,
    small: &EndAlgebra,
) -> Result<ExactMatrix> {
    if h.rows() != small.dim() || h.cols() != big.dim() {
        return Err(Error::DimensionMismatch(format!(
            "transition matrix is {}x{}, expected {}x{}",
            h.rows(),
            h.cols(),
            small.dim(),
            big.dim()
        )));
    }
    let f = h.transpose();
    dualize(small).is_morphism(&dualize(big), &f)?;
    Ok(f)
}

/// An element of a colimit: a stage index and coordinates there.
pub type ChainElement = (usize, Vec<Scalar>);

/// A filtered colimit of coalgebras materialized along a finite chain
/// `stages[0] -> stages[1] -> ...` of verified coalgebra morphisms.
/// Elements are compared by pushing forward to the final stage.
#[derive(Debug, Clone)]
pub struct ColimitChain {
    stages: Vec<Coalgebra>,
    maps: Vec<ExactMatrix>,
}

impl ColimitChain {
    pub fn new(stages: Vec<Coalgebra>, maps: Vec<ExactMatrix>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::ChainMismatch("empty chain".into()));
        }
        if maps.len() + 1 != stages.len() {
            return Err(Error::ChainMismatch(format!(
                "{} maps for {} stages",
                maps.len(),
                stages.len()
            )));
        }
        for (i, f) in maps.iter().enumerate() {
            stages[i]
                .is_morphism(&stages[i + 1], f)
                .map_err(|e| Error::ChainMismatch(format!("map {i}: {e}")))?;
        }
        Ok(ColimitChain { stages, maps })
    }

    pub fn stages(&self) -> &[Coalgebra] {
        &self.stages
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    pub fn last(&self) -> &Coalgebra {
        self.stages.last().expect("chain is nonempty")
    }

    /// Rank of the final stage, which presents the colimit.
    pub fn final_rank(&self) -> usize {
        self.last().rank()
    }

    fn check_element(&self, el: &ChainElement) -> Result<()> {
        let (stage, coords) = el;
        if *stage >= self.stages.len() {
            return Err(Error::ChainMismatch(format!("stage {stage} out of range")));
        }
        if coords.len() != self.stages[*stage].rank() {
            return Err(Error::ChainMismatch("coordinate length mismatch".into()));
        }
        Ok(())
    }

    /// Normal form of an element: its pushforward to the last stage.
    pub fn normal_form(&self, el: &ChainElement) -> Result<Vec<Scalar>> {
        self.check_element(el)?;
        let (stage, coords) = el;
        let ring = self.stages[*stage].ring();
        let mut v = ExactMatrix::from_columns(ring, coords.len(), &[coords.clone()]);
        for f in &self.maps[*stage..] {
            v = f * &v;
        }
        Ok(v.column(0))
    }

    /// Equality in the colimit: equality of pushforwards at the final stage.
    pub fn elements_equal(&self, a: &ChainElement, b: &ChainElement) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Re-verifies that comultiplication and counit commute with every
    /// pushforward, including composites to the last stage.
    pub fn verify_pushforward_compatibility(&self) -> Result<()> {
        for i in 0..self.maps.len() {
            let mut f = self.maps[i].clone();
            self.stages[i].is_morphism(&self.stages[i + 1], &f)?;
            for j in i + 1..self.maps.len() {
                f = &self.maps[j] * &f;
                self.stages[i].is_morphism(&self.stages[j + 1], &f)?;
            }
        }
        Ok(())
    }
}
