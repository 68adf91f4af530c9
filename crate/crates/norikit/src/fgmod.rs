//! Finitely generated modules over Q or Z given by presentation matrices,
//! with morphisms, normal forms and Hom computation. A presentation with
//! generator count `a0` and relation matrix `A` (columns are relators)
//! stands for the module `coker(A : R^{a1} -> R^{a0})`.

use num_bigint::BigInt;

use crate::exact_linalg::{solve_in_span, ExactMatrix, Ring, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ring: Ring,
    generators: usize,
    relations: ExactMatrix,
}

impl Presentation {
    pub fn new(ring: Ring, generators: usize, relations: ExactMatrix) -> Result<Self> {
        if relations.ring() != ring {
            return Err(Error::RingMismatch { expected: ring, found: relations.ring() });
        }
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        Ok(Presentation { ring, generators, relations })
    }

    /// The free module of the given rank.
    pub fn free(ring: Ring, rank: usize) -> Self {
        Presentation {
            ring,
            generators: rank,
            relations: ExactMatrix::zeros(ring, rank, 0),
        }
    }

    /// The cyclic module Z/n (or Q/(n) over Q, which is 0 for n != 0).
    pub fn cyclic(ring: Ring, n: i64) -> Self {
        Presentation {
            ring,
            generators: 1,
            relations: ExactMatrix::from_i64(ring, &[&[n]]),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &ExactMatrix {
        &self.relations
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_zero()
    }

    /// Decomposes `coker(relations)` as `R^free_rank (+) (+)_i R/d_i` with
    /// `d_i | d_{i+1}` and every `d_i > 1`. Over Q the torsion part is
    /// always empty.
    pub fn normal_form(&self) -> NormalForm {
        match self.ring {
            Ring::Q => NormalForm {
                free_rank: self.generators - self.relations.rank(),
                invariant_factors: Vec::new(),
            },
            Ring::Z => {
                let diag = self.relations.snf().expect("ring checked").diagonal();
                let free_rank = self.generators - diag.len();
                let invariant_factors = diag
                    .into_iter()
                    .filter(|d| d > &BigInt::from(1))
                    .collect();
                NormalForm { free_rank, invariant_factors }
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        let nf = self.normal_form();
        nf.free_rank == 0 && nf.invariant_factors.is_empty()
    }

    /// Does `v` (a vector in generator coordinates) lie in the column
    /// span of the relations, i.e. represent zero in the module?
    pub fn is_zero_element(&self, v: &[Scalar]) -> bool {
        let gens: Vec<Vec<Scalar>> = (0..self.relations.cols())
            .map(|j| self.relations.column(j))
            .collect();
        solve_in_span(&gens, v).map(|s| s.is_some()).unwrap_or(false)
    }

    /// Congruence of matrices modulo the relations: every column of
    /// `a - b` must represent zero.
    pub fn matrices_congruent(&self, a: &ExactMatrix, b: &ExactMatrix) -> bool {
        if a.rows() != self.generators || a.rows() != b.rows() || a.cols() != b.cols() {
            return false;
        }
        let d = a.sub(b);
        (0..d.cols()).all(|j| self.is_zero_element(&d.column(j)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

/// A morphism of presented modules, acting on generator coordinates.
#[derive(Debug, Clone)]
pub struct PresentedMorphism {
    pub source: Presentation,
    pub target: Presentation,
    pub matrix: ExactMatrix,
}

impl PresentedMorphism {
    pub fn new(source: Presentation, target: Presentation, matrix: ExactMatrix) -> Result<Self> {
        if source.ring() != target.ring() || matrix.ring() != source.ring() {
            return Err(Error::RingMismatch { expected: source.ring(), found: matrix.ring() });
        }
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            )));
        }
        Ok(PresentedMorphism { source, target, matrix })
    }

    pub fn identity(p: &Presentation) -> Self {
        PresentedMorphism {
            source: p.clone(),
            target: p.clone(),
            matrix: ExactMatrix::identity(p.ring(), p.generators()),
        }
    }

    /// The descent condition for maps of cokernels: the image of every
    /// source relator must die in the target module.
    pub fn is_well_defined(&self) -> bool {
        let mapped = &self.matrix * self.source.relations();
        (0..mapped.cols()).all(|j| self.target.is_zero_element(&mapped.column(j)))
    }

    pub fn compose(&self, then: &PresentedMorphism) -> Result<PresentedMorphism> {
        if then.source.generators() != self.target.generators() {
            return Err(Error::DimensionMismatch("composition shape mismatch".into()));
        }
        PresentedMorphism::new(self.source.clone(), then.target.clone(), &then.matrix * &self.matrix)
    }

    /// True when the morphism is well defined and bijective. Surjectivity
    /// is the triviality of `coker [matrix | target relations]`; injectivity
    /// asks that every generator preimage of the target relations already
    /// lies in the source relations.
    pub fn is_isomorphism(&self) -> bool {
        if !self.is_well_defined() {
            return false;
        }
        let ring = self.source.ring();
        // surjective: generators of the target are hit modulo relations
        let cok = Presentation::new(
            ring,
            self.target.generators(),
            ExactMatrix::hstack(&[&self.matrix, self.target.relations()]),
        )
        .expect("shapes agree");
        if !cok.is_trivial() {
            return false;
        }
        // injective: {x : Fx in span(relations_target)} must map into
        // span(relations_source)
        let relt = self.target.relations();
        let sys = ExactMatrix::hstack(&[&self.matrix, &relt.neg()]);
        let kernel = sys.kernel_matrix();
        let src_gens: Vec<Vec<Scalar>> = (0..self.source.relations().cols())
            .map(|j| self.source.relations().column(j))
            .collect();
        for j in 0..kernel.cols() {
            let x: Vec<Scalar> = kernel.column(j)[..self.source.generators()].to_vec();
            match solve_in_span(&src_gens, &x) {
                Ok(Some(_)) => {}
                _ => return false,
            }
        }
        true
    }
}

/// A presentation of `Hom_R(M, N)`.
///
/// Generators are the `target.generators x source.generators` matrices
/// `F` with `F * A` landing in the column span of `B` (found as a kernel
/// with auxiliary unknowns); relations identify combinations that factor
/// through `B`. The presentation is not canonical, only its normal form
/// is. Also returns the generator matrices in column-major vec form,
/// which later modules compare against kernel inclusions.
pub fn hom_module(m: &Presentation, n: &Presentation) -> Result<(Presentation, Vec<Vec<Scalar>>)> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch { expected: m.ring(), found: n.ring() });
    }
    let ring = m.ring();
    let (a0, a1) = (m.generators(), m.relations().cols());
    let b0 = n.generators();
    let a = m.relations();
    let b = n.relations();

    // unknowns (F, G) with F*A - B*G = 0, in column-major vec coordinates:
    // (A^T (x) I_b0) vec F - (I_a1 (x) B) vec G = 0
    let id_b0 = ExactMatrix::identity(ring, b0);
    let id_a1 = ExactMatrix::identity(ring, a1);
    let lhs = crate::exact_linalg::kronecker(&a.transpose(), &id_b0)?;
    let rhs = crate::exact_linalg::kronecker(&id_a1, b)?;
    let sys = ExactMatrix::hstack(&[&lhs, &rhs.neg()]);
    let kernel = sys.kernel_matrix();

    let fdim = b0 * a0;
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..kernel.cols() {
        let f: Vec<Scalar> = kernel.column(j)[..fdim].to_vec();
        gens.push(f);
    }

    // maps factoring through B: the column span of (I_a0 (x) B) on vec F
    let id_a0 = ExactMatrix::identity(ring, a0);
    let trivial = crate::exact_linalg::kronecker(&id_a0, b)?;

    // relations: {c : sum_i c_i gen_i lies in the trivial span}
    let gen_mat = ExactMatrix::from_columns(ring, fdim, &gens);
    let rel_sys = ExactMatrix::hstack(&[&gen_mat, &trivial.neg()]);
    let rel_kernel = rel_sys.kernel_matrix();
    let s = gens.len();
    let relations = rel_kernel.submatrix(0, 0, s, rel_kernel.cols());

    Ok((Presentation::new(ring, s, relations)?, gens))
}
