//! End(T) for a finite representation: the algebra of tuples `(e_p)` of
//! vertex endomorphisms satisfying `Tm . e_p = e_q . Tm` for every edge
//! `m: p -> q`, with its multiplication structure constants and unit, the
//! transition homomorphisms between subdiagrams, and restriction of
//! scalars along them.

use std::sync::Arc;

use crate::diagram::Representation;
use crate::emodule::EModule;
use crate::error::{Error, Result};
use crate::exact_linalg::{kronecker, solve_in_span, ExactMatrix, Ring, Scalar};
use crate::fgmod::Presentation;

/// Basis of intertwiner tuples plus multiplication data.
///
/// Basis order is canonical: vertices in id order, `vec()` column-major,
/// kernel basis RREF-reduced over Q and Hermite-reduced (saturated) over
/// Z, so structure constants are deterministic.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    rep: Representation,
    vertex_order: Vec<String>,
    tuple_len: usize,
    basis: Vec<Vec<ExactMatrix>>,
    basis_vectors: Vec<Vec<Scalar>>,
    structure: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

/// The linearized intertwiner equations. The unknown vector concatenates
/// `vec(e_p)` (column-major) over vertices in id order; each edge
/// `m: p -> q` contributes the block row `(I (x) Tm) vec(e_p) - (Tm^T (x) I) vec(e_q) = 0`.
/// Its kernel is End(T) as an R-module.
pub fn intertwiner_system(rep: &Representation) -> Result<ExactMatrix> {
    let violations = rep.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidRepresentation(
            violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        ));
    }
    let ring = rep.ring;
    let vertices = rep.diagram.vertices();
    let mut offsets = Vec::with_capacity(vertices.len());
    let mut total = 0;
    for v in vertices {
        offsets.push(total);
        total += rep.rank_of(v) * rep.rank_of(v);
    }
    let total_rows: usize = rep
        .diagram
        .edges()
        .iter()
        .map(|e| rep.rank_of(&e.dst) * rep.rank_of(&e.src))
        .sum();

    let mut m = ExactMatrix::zeros(ring, total_rows, total);
    let mut r0 = 0;
    for e in rep.diagram.edges() {
        let t = &rep.edge_matrix[&e.id];
        let rp = rep.rank_of(&e.src);
        let rq = rep.rank_of(&e.dst);
        let pi = vertices.iter().position(|v| v == &e.src).expect("validated");
        let qi = vertices.iter().position(|v| v == &e.dst).expect("validated");
        let src_block = kronecker(&ExactMatrix::identity(ring, rp), t)?;
        let dst_block = kronecker(&t.transpose(), &ExactMatrix::identity(ring, rq))?;
        if pi == qi {
            m.paste(r0, offsets[pi], &src_block.sub(&dst_block));
        } else {
            m.paste(r0, offsets[pi], &src_block);
            m.paste(r0, offsets[qi], &dst_block.neg());
        }
        r0 += rq * rp;
    }
    Ok(m)
}

/// Solves for End(T): kernel of the intertwiner system reshaped into
/// tuples, structure constants and unit coordinates expressed in that
/// basis. Closure of the product and membership of the identity are
/// theorems; a solve failure is reported as an internal error.
pub fn compute_end(rep: &Representation) -> Result<EndAlgebra> {
    let system = intertwiner_system(rep)?;
    let ring = rep.ring;
    let vertices: Vec<String> = rep.diagram.vertices().to_vec();
    let mut offsets = Vec::with_capacity(vertices.len());
    let mut total = 0;
    for v in &vertices {
        offsets.push(total);
        total += rep.rank_of(v) * rep.rank_of(v);
    }

    let kernel = system.kernel_matrix();
    let dim = kernel.cols();
    let mut basis = Vec::with_capacity(dim);
    let mut basis_vectors = Vec::with_capacity(dim);
    for i in 0..dim {
        let flat = kernel.column(i);
        let tuple: Vec<ExactMatrix> = vertices
            .iter()
            .enumerate()
            .map(|(vi, v)| {
                let d = rep.rank_of(v);
                ExactMatrix::unvec_col_major(ring, d, d, &flat[offsets[vi]..offsets[vi] + d * d])
            })
            .collect();
        basis.push(tuple);
        basis_vectors.push(flat);
    }

    let flatten = |tuple: &[ExactMatrix]| -> Vec<Scalar> {
        tuple.iter().flat_map(|m| m.vec_col_major()).collect()
    };

    // all product coordinates and the unit are found in one batched
    // solve against the basis matrix
    let identity_tuple: Vec<ExactMatrix> = vertices
        .iter()
        .map(|v| ExactMatrix::identity(ring, rep.rank_of(v)))
        .collect();
    let mut targets: Vec<Vec<Scalar>> = Vec::with_capacity(dim * dim + 1);
    for i in 0..dim {
        for j in 0..dim {
            let product: Vec<ExactMatrix> =
                basis[i].iter().zip(&basis[j]).map(|(a, b)| a * b).collect();
            targets.push(flatten(&product));
        }
    }
    targets.push(flatten(&identity_tuple));
    let rhs = ExactMatrix::from_columns(ring, total, &targets);
    let solved = kernel.solve_right(&rhs).ok_or_else(|| {
        Error::InternalClosureFailure("a basis product or the identity left the span".into())
    })?;
    let mut structure = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            structure[i][j] = solved.column(i * dim + j);
        }
    }
    let unit = solved.column(dim * dim);

    Ok(EndAlgebra {
        rep: rep.clone(),
        vertex_order: vertices,
        tuple_len: total,
        basis,
        basis_vectors,
        structure,
        unit,
    })
}

impl EndAlgebra {
    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn ring(&self) -> Ring {
        self.rep.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_order(&self) -> &[String] {
        &self.vertex_order
    }

    /// One square matrix per vertex, in vertex id order.
    pub fn basis_tuple(&self, i: usize) -> &[ExactMatrix] {
        &self.basis[i]
    }

    pub fn basis_component(&self, i: usize, vertex: &str) -> &ExactMatrix {
        let vi = self.vertex_order.iter().position(|v| v == vertex).expect("unknown vertex");
        &self.basis[i][vi]
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        &self.basis_vectors[i]
    }

    pub fn structure_coords(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, l: usize) -> &Scalar {
        &self.structure[i][j][l]
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    /// Bilinear extension of the basis products via structure constants.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let dim = self.dim();
        if x.len() != dim || y.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "coordinate vectors of length {} and {} in a dimension-{dim} algebra",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Scalar::zero(self.ring()); dim];
        for i in 0..dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for l in 0..dim {
                    let c = &self.structure[i][j][l];
                    if !c.is_zero() {
                        out[l] = &out[l] + &(&xy * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The tuple represented by a coordinate vector.
    pub fn tuple_from_coords(&self, coords: &[Scalar]) -> Vec<ExactMatrix> {
        assert_eq!(coords.len(), self.dim());
        let mut out: Vec<ExactMatrix> = self
            .vertex_order
            .iter()
            .map(|v| {
                let d = self.rep.rank_of(v);
                ExactMatrix::zeros(self.ring(), d, d)
            })
            .collect();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (vi, m) in self.basis[i].iter().enumerate() {
                out[vi] = out[vi].add(&m.scale(c));
            }
        }
        out
    }

    /// Coordinates of an arbitrary tuple, when it lies in the algebra.
    pub fn coords_of_tuple(&self, tuple: &[ExactMatrix]) -> Result<Option<Vec<Scalar>>> {
        let flat: Vec<Scalar> = tuple.iter().flat_map(|m| m.vec_col_major()).collect();
        if flat.len() != self.tuple_len {
            return Err(Error::DimensionMismatch("tuple does not match vertex ranks".into()));
        }
        solve_in_span(&self.basis_vectors, &flat)
    }

    /// Left multiplication by basis element `i` in basis coordinates.
    pub fn left_regular_matrix(&self, i: usize) -> ExactMatrix {
        let dim = self.dim();
        ExactMatrix::from_fn(self.ring(), dim, dim, |l, j| self.structure[i][j][l].clone())
    }

    /// The module `Tp` at a vertex: the algebra acts through its
    /// components at that vertex.
    pub fn tautological_module(self: &Arc<Self>, vertex: &str) -> Result<EModule> {
        let d = self.rep.rank_of(vertex);
        let action = (0..self.dim()).map(|i| self.basis_component(i, vertex).clone()).collect();
        EModule::free(Arc::clone(self), d, action)
    }

    /// The algebra as a left module over itself.
    pub fn regular_module(self: &Arc<Self>) -> Result<EModule> {
        let action = (0..self.dim()).map(|i| self.left_regular_matrix(i)).collect();
        EModule::free(Arc::clone(self), self.dim(), action)
    }
}

/// The algebra homomorphism `End(T_F') -> End(T_F)` for a full subdiagram
/// `F` of `F'`: project each basis tuple of the big algebra to the
/// vertices of `F` and re-express it in the small basis. Returned as the
/// `dim(small) x dim(big)` coordinate matrix; unit and multiplication
/// preservation are checked.
pub fn transition_hom(big: &EndAlgebra, small: &EndAlgebra) -> Result<ExactMatrix> {
    let expected = big.rep().restrict(&small.rep().diagram).map_err(|_| {
        Error::NotASubdiagram("small algebra's diagram is not a full subdiagram".into())
    })?;
    if &expected != small.rep() {
        return Err(Error::NotASubdiagram(
            "small algebra was not computed from the restricted representation".into(),
        ));
    }

    let mut columns = Vec::with_capacity(big.dim());
    for i in 0..big.dim() {
        let projected: Vec<ExactMatrix> = small
            .vertex_order()
            .iter()
            .map(|v| big.basis_component(i, v).clone())
            .collect();
        let coords = small.coords_of_tuple(&projected)?.ok_or_else(|| {
            Error::NotInSpan(format!("projection of basis tuple {i} is not an intertwiner"))
        })?;
        columns.push(coords);
    }
    let h = ExactMatrix::from_columns(big.ring(), small.dim(), &columns);

    // algebra homomorphism laws, checked exactly
    let unit_big = ExactMatrix::from_columns(big.ring(), big.dim(), &[big.unit_coords().to_vec()]);
    if (&h * &unit_big).column(0) != small.unit_coords() {
        return Err(Error::InternalClosureFailure("transition map does not preserve the unit".into()));
    }
    for i in 0..big.dim() {
        for j in 0..big.dim() {
            let lhs = {
                let prod = ExactMatrix::from_columns(
                    big.ring(),
                    big.dim(),
                    &[big.structure_coords(i, j).to_vec()],
                );
                (&h * &prod).column(0)
            };
            let rhs = small.multiply(&h.column(i), &h.column(j))?;
            if lhs != rhs {
                return Err(Error::InternalClosureFailure(format!(
                    "transition map is not multiplicative at basis pair ({i}, {j})"
                )));
            }
        }
    }
    Ok(h)
}

/// Pulls a module over the small algebra back along a transition matrix:
/// the big basis element `b_i` acts by the small action of `h e_i`. The
/// underlying module is unchanged.
pub fn restrict_scalars(
    module: &EModule,
    h: &ExactMatrix,
    big: &Arc<EndAlgebra>,
) -> Result<EModule> {
    let small = module.algebra();
    if h.rows() != small.dim() || h.cols() != big.dim() {
        return Err(Error::DimensionMismatch(format!(
            "transition matrix is {}x{}, expected {}x{}",
            h.rows(),
            h.cols(),
            small.dim(),
            big.dim()
        )));
    }
    let action: Vec<ExactMatrix> = (0..big.dim()).map(|i| module.act(&h.column(i))).collect();
    EModule::new(Arc::clone(big), module.underlying().clone(), action)
}

/// Intertwiner basis of a one-vertex situation: all square matrices of
/// size `d` commuting with every matrix in `mats`. Over Z the basis is a
/// saturated lattice basis.
pub fn commutant(ring: Ring, d: usize, mats: &[ExactMatrix]) -> Result<Vec<ExactMatrix>> {
    for m in mats {
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch("commutant of non-square matrices".into()));
        }
        if m.ring() != ring {
            return Err(Error::RingMismatch { expected: ring, found: m.ring() });
        }
    }
    let id = ExactMatrix::identity(ring, d);
    let blocks: Vec<ExactMatrix> = mats
        .iter()
        .map(|m| Ok(kronecker(&id, m)?.sub(&kronecker(&m.transpose(), &id)?)))
        .collect::<Result<_>>()?;
    let system = if blocks.is_empty() {
        ExactMatrix::zeros(ring, 0, d * d)
    } else {
        ExactMatrix::vstack(&blocks.iter().collect::<Vec<_>>())
    };
    let kernel = system.kernel_matrix();
    Ok((0..kernel.cols())
        .map(|j| ExactMatrix::unvec_col_major(ring, d, d, &kernel.column(j)))
        .collect())
}

/// A free presentation wrapper used when an `EModule` lives on `R^d`.
pub fn free_underlying(ring: Ring, rank: usize) -> Presentation {
    Presentation::free(ring, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::representation_from_json;

    fn rep(json: &str) -> Representation {
        representation_from_json(json).unwrap()
    }

    fn jordan_rep() -> Representation {
        rep(r#"{"ring":"Q",
                "vertices":[{"id":"p","rank":2}],
                "edges":[{"id":"n","src":"p","dst":"p","matrix":[["0","1"],["0","0"]]}]}"#)
    }

    fn identity_edge_rep() -> Representation {
        rep(r#"{"ring":"Q",
                "vertices":[{"id":"p","rank":1},{"id":"q","rank":1}],
                "edges":[{"id":"m","src":"p","dst":"q","matrix":[["1"]]}]}"#)
    }

    #[test]
    fn system_with_no_edges_has_no_constraints() {
        let r = rep(r#"{"ring":"Q","vertices":[{"id":"p","rank":2},{"id":"q","rank":1}],"edges":[]}"#);
        let m = intertwiner_system(&r).unwrap();
        assert_eq!(m.rows(), 0);
        assert_eq!(m.cols(), 5);
    }

    #[test]
    fn system_of_identity_edge() {
        let m = intertwiner_system(&identity_edge_rep()).unwrap();
        // expand a*1 - 1*b = 0
        assert_eq!(m, ExactMatrix::from_i64(Ring::Q, &[&[1, -1]]));
    }

    #[test]
    fn system_of_jordan_loop_matches_brute_force() {
        let m = intertwiner_system(&jordan_rep()).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 4));
        let e = compute_end(&jordan_rep()).unwrap();
        assert_eq!(e.dim(), 2);

        // brute-force commutant of the Jordan block over a small grid
        let n = ExactMatrix::from_i64(Ring::Q, &[&[0, 1], &[0, 0]]);
        let mut found = Vec::new();
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                for c in -2..=2i64 {
                    for d in -2..=2i64 {
                        let x = ExactMatrix::from_i64(Ring::Q, &[&[a, b], &[c, d]]);
                        if &x * &n == &n * &x {
                            found.push(x.vec_col_major());
                        }
                    }
                }
            }
        }
        let span = ExactMatrix::from_columns(Ring::Q, 4, &found);
        assert_eq!(span.rank(), 2);
        // every brute-force solution lies in the solver's span
        let basis: Vec<Vec<Scalar>> = (0..e.dim()).map(|i| e.basis_vector(i).to_vec()).collect();
        for v in &found {
            assert!(solve_in_span(&basis, v).unwrap().is_some());
        }
    }

    #[test]
    fn full_matrix_algebra_and_matrix_units() {
        let r = rep(r#"{"ring":"Q","vertices":[{"id":"p","rank":2}],"edges":[]}"#);
        let e = compute_end(&r).unwrap();
        // nullspace of the empty constraint system is everything
        assert_eq!(e.dim(), 4);

        // canonical basis order is E11, E21, E12, E22 (column-major)
        let coords = |i: usize| {
            let mut v = vec![Scalar::zero(Ring::Q); 4];
            v[i] = Scalar::one(Ring::Q);
            v
        };
        // E12 . E21 = E11 (matrix-unit product oracle)
        let e12 = coords(2);
        let e21 = coords(1);
        assert_eq!(e.multiply(&e12, &e21).unwrap(), coords(0));
        // E12 . E12 = 0
        let zero = vec![Scalar::zero(Ring::Q); 4];
        assert_eq!(e.multiply(&e12, &e12).unwrap(), zero);
    }

    #[test]
    fn identity_edge_algebra_is_diagonal() {
        let e = compute_end(&identity_edge_rep()).unwrap();
        assert_eq!(e.dim(), 1);
        assert!(e.basis_component(0, "p").is_identity());
        assert!(e.basis_component(0, "q").is_identity());
        assert_eq!(e.unit_coords(), &[Scalar::one(Ring::Q)]);
    }

    #[test]
    fn jordan_multiplication_table() {
        let e = compute_end(&jordan_rep()).unwrap();
        assert_eq!(e.dim(), 2);
        // locate I and N in the computed basis
        let i_coords = e
            .coords_of_tuple(&[ExactMatrix::identity(Ring::Q, 2)])
            .unwrap()
            .expect("identity is an intertwiner");
        let n = ExactMatrix::from_i64(Ring::Q, &[&[0, 1], &[0, 0]]);
        let n_coords = e.coords_of_tuple(&[n]).unwrap().expect("N commutes with itself");
        // unit law and N^2 = 0
        assert_eq!(e.multiply(&e.unit_coords().to_vec(), &n_coords).unwrap(), n_coords);
        let zero = vec![Scalar::zero(Ring::Q); 2];
        assert_eq!(e.multiply(&n_coords, &n_coords).unwrap(), zero);
        assert_eq!(e.multiply(&i_coords, &i_coords).unwrap(), i_coords);
    }

    #[test]
    fn intertwiner_equations_hold_for_every_basis_tuple() {
        for r in [jordan_rep(), identity_edge_rep()] {
            let e = compute_end(&r).unwrap();
            for i in 0..e.dim() {
                for edge in r.diagram.edges() {
                    let t = &r.edge_matrix[&edge.id];
                    let ep = e.basis_component(i, &edge.src);
                    let eq = e.basis_component(i, &edge.dst);
                    assert_eq!(t * ep, eq * t);
                }
            }
        }
    }

    #[test]
    fn associativity_of_structure_constants() {
        let e = compute_end(&jordan_rep()).unwrap();
        let dim = e.dim();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for m in 0..dim {
                        let lhs: Scalar = (0..dim).fold(Scalar::zero(Ring::Q), |acc, l| {
                            &acc + &(e.structure_constant(i, j, l) * e.structure_constant(l, k, m))
                        });
                        let rhs: Scalar = (0..dim).fold(Scalar::zero(Ring::Q), |acc, l| {
                            &acc + &(e.structure_constant(j, k, l) * e.structure_constant(i, l, m))
                        });
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_diagram_yields_the_zero_algebra() {
        let r = rep(r#"{"ring":"Q","vertices":[],"edges":[]}"#);
        let e = compute_end(&r).unwrap();
        assert_eq!(e.dim(), 0);
        assert!(e.unit_coords().is_empty());
        assert_eq!(e.multiply(&[], &[]).unwrap(), Vec::<Scalar>::new());
    }

    #[test]
    fn transition_hom_identity_case() {
        let r = jordan_rep();
        let e = compute_end(&r).unwrap();
        let h = transition_hom(&e, &e).unwrap();
        // same basis on both sides: change of basis is the identity
        assert!(h.is_identity());
    }

    #[test]
    fn transition_hom_projects_the_diagonal() {
        let r = identity_edge_rep();
        let big = compute_end(&r).unwrap();
        let small_rep = r.restrict_to(&["p".into()]).unwrap();
        let small = compute_end(&small_rep).unwrap();
        let h = transition_hom(&big, &small).unwrap();
        assert_eq!(h, ExactMatrix::from_i64(Ring::Q, &[&[1]]));
    }

    #[test]
    fn transition_hom_drops_isolated_component() {
        let r = rep(r#"{"ring":"Q",
            "vertices":[{"id":"p","rank":2},{"id":"q","rank":1}],
            "edges":[{"id":"n","src":"p","dst":"p","matrix":[["0","1"],["0","0"]]}]}"#);
        let big = compute_end(&r).unwrap();
        assert_eq!(big.dim(), 3); // {I, N} at p times scalars at q
        let small = compute_end(&r.restrict_to(&["p".into()]).unwrap()).unwrap();
        assert_eq!(small.dim(), 2);
        let h = transition_hom(&big, &small).unwrap();
        assert_eq!((h.rows(), h.cols()), (2, 3));
        // projection keeps the p-components: surjective onto the commutant
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn transition_hom_rejects_non_subdiagrams() {
        let r = identity_edge_rep();
        let big = compute_end(&r).unwrap();
        let other = compute_end(&jordan_rep()).unwrap();
        assert!(matches!(
            transition_hom(&big, &other),
            Err(Error::NotASubdiagram(_))
        ));
    }

    #[test]
    fn restrict_scalars_examples() {
        let r = identity_edge_rep();
        let big = Arc::new(compute_end(&r).unwrap());
        let small = Arc::new(compute_end(&r.restrict_to(&["p".into()]).unwrap()).unwrap());
        let h = transition_hom(&big, &small).unwrap();

        let module = small.tautological_module("p").unwrap();
        let pulled = restrict_scalars(&module, &h, &big).unwrap();
        assert_eq!(pulled.rank(), module.rank());
        // pullback along {(a,a)} -> {a} reproduces the diagonal action
        assert!(pulled.action(0).is_identity());

        // h = identity leaves the module untouched
        let id = ExactMatrix::identity(Ring::Q, small.dim());
        let same = restrict_scalars(&module, &id, &small).unwrap();
        assert_eq!(same.actions(), module.actions());
    }

    #[test]
    fn saturation_over_z_small_case() {
        let r = rep(r#"{"ring":"Z",
            "vertices":[{"id":"p","rank":1},{"id":"q","rank":1}],
            "edges":[{"id":"m","src":"p","dst":"q","matrix":[["2"]]}]}"#);
        let e = compute_end(&r).unwrap();
        // 2a = 2b forces a = b: the primitive solution is (1,1)
        assert_eq!(e.dim(), 1);
        assert_eq!(e.basis_vector(0), &[Scalar::one(Ring::Z), Scalar::one(Ring::Z)]);
        // brute force saturation: all small integer intertwiners lie in the lattice
        let basis: Vec<Vec<Scalar>> = vec![e.basis_vector(0).to_vec()];
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                if 2 * a == 2 * b {
                    let v = vec![Scalar::from_int(Ring::Z, a), Scalar::from_int(Ring::Z, b)];
                    assert!(solve_in_span(&basis, &v).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn commutant_of_nothing_is_everything() {
        let c = commutant(Ring::Q, 2, &[]).unwrap();
        assert_eq!(c.len(), 4);
        let n = ExactMatrix::from_i64(Ring::Q, &[&[0, 1], &[0, 0]]);
        let c = commutant(Ring::Q, 2, &[n]).unwrap();
        assert_eq!(c.len(), 2);
    }
}
