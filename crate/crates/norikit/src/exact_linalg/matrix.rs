use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::scalar::{Ring, Scalar};
use crate::error::{Error, Result};

/// Dense matrix with exact entries, row-major storage. All entries share
/// the matrix's ring; shapes with zero rows or columns are legal values.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ring,
            rows,
            cols,
            entries: vec![Scalar::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(ring));
        }
        m
    }

    pub fn from_fn(ring: Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.ring(), ring, "entry ring mismatch");
                entries.push(e);
            }
        }
        ExactMatrix { ring, rows, cols, entries }
    }

    /// Builds a matrix from rows of scalars; all rows must have equal
    /// length and every entry must live in `ring`.
    pub fn from_rows(ring: Ring, data: Vec<Vec<Scalar>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for row in &data {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "ragged rows: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::RingMismatch { expected: ring, found: e.ring() });
                }
                entries.push(e.clone());
            }
        }
        Ok(ExactMatrix { ring, rows, cols, entries })
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(ring: Ring, data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        Self::from_fn(ring, rows, cols, |i, j| Scalar::from_int(ring, data[i][j]))
    }

    pub fn from_columns(ring: Ring, len: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_fn(ring, len, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.ring(), self.ring, "entry ring mismatch");
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.ring, self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in matrix addition");
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self::from_fn(self.ring, self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in matrix subtraction");
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self::from_fn(self.ring, self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        assert_eq!(s.ring(), self.ring, "ring mismatch in scaling");
        Self::from_fn(self.ring, self.rows, self.cols, |i, j| self.at(i, j) * s)
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Copies `block` into `self` with upper-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        assert_eq!(self.ring, block.ring, "ring mismatch in paste");
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.entries[(r0 + i) * self.cols + (c0 + j)] = block.at(i, j).clone();
            }
        }
    }

    pub fn hstack(parts: &[&ExactMatrix]) -> Self {
        assert!(!parts.is_empty());
        let ring = parts[0].ring;
        let rows = parts[0].rows;
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(ring, rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "row mismatch in hstack");
            m.paste(0, c0, p);
            c0 += p.cols;
        }
        m
    }

    pub fn vstack(parts: &[&ExactMatrix]) -> Self {
        assert!(!parts.is_empty());
        let ring = parts[0].ring;
        let cols = parts[0].cols;
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut m = Self::zeros(ring, rows, cols);
        let mut r0 = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "column mismatch in vstack");
            m.paste(r0, 0, p);
            r0 += p.rows;
        }
        m
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(self.ring, rows, cols, |i, j| self.at(r0 + i, c0 + j).clone())
    }

    /// The same matrix viewed over Q.
    pub fn to_rational(&self) -> Self {
        Self::from_fn(Ring::Q, self.rows, self.cols, |i, j| Scalar::Rat(self.at(i, j).to_rational()))
    }

    /// The same matrix viewed over Z; panics if an entry is fractional.
    pub fn to_integer(&self) -> Self {
        Self::from_fn(Ring::Z, self.rows, self.cols, |i, j| {
            Scalar::Int(self.at(i, j).expect_integer())
        })
    }

    /// Column-major flattening: entry (i, j) lands at index `j * rows + i`.
    pub fn vec_col_major(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self.at(i, j).clone());
            }
        }
        v
    }

    /// Inverse of [`vec_col_major`](Self::vec_col_major).
    pub fn unvec_col_major(ring: Ring, rows: usize, cols: usize, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), rows * cols, "vector length does not match shape");
        Self::from_fn(ring, rows, cols, |i, j| v[j * rows + i].clone())
    }

    // --- row/column operations used by the normal-form algorithms ---

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.entries[idx] = -&self.entries[idx];
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.entries[idx] = &self.entries[idx] * s;
        }
    }

    /// row_a += q * row_b
    fn row_addmul(&mut self, a: usize, b: usize, q: &Scalar) {
        for j in 0..self.cols {
            let t = &(&self.entries[b * self.cols + j] * q) + &self.entries[a * self.cols + j];
            self.entries[a * self.cols + j] = t;
        }
    }

    /// col_a += q * col_b
    fn col_addmul(&mut self, a: usize, b: usize, q: &Scalar) {
        for i in 0..self.rows {
            let t = &(&self.entries[i * self.cols + b] * q) + &self.entries[i * self.cols + a];
            self.entries[i * self.cols + a] = t;
        }
    }

    // --- algorithms ---

    /// Reduced row echelon form over Q with the list of pivot columns.
    pub fn rref(&self) -> Result<(ExactMatrix, Vec<usize>)> {
        if self.ring != Ring::Q {
            return Err(Error::RingMismatch { expected: Ring::Q, found: self.ring });
        }
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = Scalar::one(Ring::Q).try_div(m.at(r, c)).expect("pivot is nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let q = -m.at(i, c);
                    m.row_addmul(i, r, &q);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = self.to_rational().rref().expect("rref over Q");
        pivots.len()
    }

    /// Basis of `{v : M v = 0}` over Q, in the canonical free-variable
    /// form derived from the RREF. rank + nullity = cols.
    pub fn nullspace_q(&self) -> Result<Vec<Vec<Scalar>>> {
        if self.ring != Ring::Q {
            return Err(Error::RingMismatch { expected: Ring::Q, found: self.ring });
        }
        let (r, pivots) = self.rref()?;
        let mut basis = Vec::new();
        let mut next_pivot = 0;
        for c in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == c {
                next_pivot += 1;
                continue;
            }
            let mut v = vec![Scalar::zero(Ring::Q); self.cols];
            v[c] = Scalar::one(Ring::Q);
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(k, c);
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Smith normal form over Z: returns `(U, S, V)` with `S = U * M * V`,
    /// `U`, `V` unimodular and `S` diagonal with nonnegative entries
    /// forming a divisibility chain.
    pub fn snf(&self) -> Result<SmithDecomposition> {
        if self.ring != Ring::Z {
            return Err(Error::RingMismatch { expected: Ring::Z, found: self.ring });
        }
        let mut s = self.clone();
        let mut u = ExactMatrix::identity(Ring::Z, self.rows);
        let mut v = ExactMatrix::identity(Ring::Z, self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            // move an entry of minimal absolute value to the pivot slot
            let Some((pi, pj)) = min_abs_position(&s, t) else {
                break;
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            loop {
                clear_pivot_cross(&mut s, &mut u, &mut v, t);
                // pivot must divide the rest of the submatrix
                match find_nondivisible(&s, t) {
                    None => break,
                    Some(i) => {
                        let one = Scalar::one(Ring::Z);
                        s.row_addmul(t, i, &one);
                        u.row_addmul(t, i, &one);
                    }
                }
            }
            if s.at(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        debug_assert_eq!(&(&u * self) * &v, s);
        Ok(SmithDecomposition { u, s, v })
    }

    /// Lattice basis of the integer kernel `{v in Z^cols : M v = 0}`,
    /// saturated (every integer solution is an integer combination) and
    /// returned in Hermite-reduced form for determinism.
    pub fn kernel_z(&self) -> Result<Vec<Vec<Scalar>>> {
        if self.ring != Ring::Z {
            return Err(Error::RingMismatch { expected: Ring::Z, found: self.ring });
        }
        let SmithDecomposition { s, v, .. } = self.snf()?;
        let n = self.rows.min(self.cols);
        let rank = (0..n).take_while(|&i| !s.at(i, i).is_zero()).count();
        if rank == self.cols {
            return Ok(Vec::new());
        }
        // columns of V past the rank span the kernel lattice
        let raw = v.submatrix(0, rank, self.cols, self.cols - rank);
        let reduced = hermite_rows(&raw.transpose());
        Ok((0..reduced.rows).map(|i| reduced.row(i)).collect())
    }

    fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    /// Kernel basis as matrix columns, over either ring (RREF-canonical
    /// over Q, Hermite-reduced saturated lattice basis over Z).
    pub fn kernel_matrix(&self) -> ExactMatrix {
        let basis = match self.ring {
            Ring::Q => self.nullspace_q().expect("ring checked"),
            Ring::Z => self.kernel_z().expect("ring checked"),
        };
        ExactMatrix::from_columns(self.ring, self.cols, &basis)
    }

    /// Determinant of a square matrix, computed by exact elimination.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.to_rational();
        let mut det = Scalar::one(Ring::Q);
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                return Scalar::zero(self.ring);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -&det;
            }
            det = &det * m.at(c, c);
            let inv = Scalar::one(Ring::Q).try_div(m.at(c, c)).expect("nonzero pivot");
            m.scale_row(c, &inv);
            for i in (c + 1)..m.rows {
                if !m.at(i, c).is_zero() {
                    let q = -m.at(i, c);
                    m.row_addmul(i, c, &q);
                }
            }
        }
        match self.ring {
            Ring::Q => det,
            Ring::Z => Scalar::Int(det.expect_integer()),
        }
    }

    /// Solves `self * X = rhs` exactly in the matrix ring, column by
    /// column. `None` if any column has no solution. Free variables are
    /// set to zero, which makes the answer deterministic.
    pub fn solve_right(&self, rhs: &ExactMatrix) -> Option<ExactMatrix> {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in solve");
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        match self.ring {
            Ring::Q => self.solve_right_q(rhs),
            Ring::Z => self.solve_right_z(rhs),
        }
    }

    fn solve_right_q(&self, rhs: &ExactMatrix) -> Option<ExactMatrix> {
        let aug = ExactMatrix::hstack(&[self, rhs]);
        let (r, pivots) = aug.rref().expect("rref over Q");
        // a pivot inside the rhs block means an inconsistent column
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = ExactMatrix::zeros(Ring::Q, self.cols, rhs.cols);
        for (k, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.at(k, self.cols + j).clone());
            }
        }
        Some(x)
    }

    fn solve_right_z(&self, rhs: &ExactMatrix) -> Option<ExactMatrix> {
        let SmithDecomposition { u, s, v } = self.snf().expect("ring checked");
        let n = self.rows.min(self.cols);
        let rank = (0..n).take_while(|&i| !s.at(i, i).is_zero()).count();
        let b = &u * rhs;
        let mut y = ExactMatrix::zeros(Ring::Z, self.cols, rhs.cols);
        for j in 0..rhs.cols {
            for i in 0..self.rows {
                if i < rank {
                    let q = b.at(i, j).try_div(s.at(i, i))?;
                    y.set(i, j, q);
                } else if !b.at(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some(&v * &y)
    }
}

/// Smith decomposition `S = U * M * V`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: ExactMatrix,
    pub s: ExactMatrix,
    pub v: ExactMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries d_1 | d_2 | ...
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.at(i, i).expect_integer())
            .take_while(|d| !d.is_zero())
            .collect()
    }
}

fn big(s: &Scalar) -> &BigInt {
    match s {
        Scalar::Int(v) => v,
        Scalar::Rat(_) => unreachable!("integer algorithms run over Z"),
    }
}

fn min_abs_position(m: &ExactMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let e = big(m.at(i, j));
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            match &best {
                Some((_, _, cur)) if *cur <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Euclidean elimination of row `t` and column `t` away from the pivot,
/// restoring both after any pivot swap.
fn clear_pivot_cross(s: &mut ExactMatrix, u: &mut ExactMatrix, v: &mut ExactMatrix, t: usize) {
    loop {
        let mut swapped = false;
        for i in (t + 1)..s.rows() {
            if big(s.at(i, t)).is_zero() {
                continue;
            }
            let q = Scalar::Int(-(big(s.at(i, t)) / big(s.at(t, t))));
            s.row_addmul(i, t, &q);
            u.row_addmul(i, t, &q);
            if !big(s.at(i, t)).is_zero() {
                s.swap_rows(t, i);
                u.swap_rows(t, i);
                swapped = true;
            }
        }
        for j in (t + 1)..s.cols() {
            if big(s.at(t, j)).is_zero() {
                continue;
            }
            let q = Scalar::Int(-(big(s.at(t, j)) / big(s.at(t, t))));
            s.col_addmul(j, t, &q);
            v.col_addmul(j, t, &q);
            if !big(s.at(t, j)).is_zero() {
                s.swap_cols(t, j);
                v.swap_cols(t, j);
                swapped = true;
            }
        }
        let col_clear = ((t + 1)..s.rows()).all(|i| big(s.at(i, t)).is_zero());
        let row_clear = ((t + 1)..s.cols()).all(|j| big(s.at(t, j)).is_zero());
        if !swapped && col_clear && row_clear {
            return;
        }
    }
}

fn find_nondivisible(s: &ExactMatrix, t: usize) -> Option<usize> {
    let d = big(s.at(t, t));
    if d.is_zero() {
        return None;
    }
    for i in (t + 1)..s.rows() {
        for j in (t + 1)..s.cols() {
            if !(big(s.at(i, j)) % d).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

/// Row-style Hermite normal form over Z: positive pivots, zeros below,
/// entries above each pivot reduced into `[0, pivot)`. Input rows must be
/// linearly independent (which kernel bases always are).
pub fn hermite_rows(m: &ExactMatrix) -> ExactMatrix {
    assert_eq!(m.ring(), Ring::Z);
    let mut h = m.clone();
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        // euclidean reduction of column c among rows r..
        loop {
            let mut pivot: Option<(usize, BigInt)> = None;
            for i in r..h.rows() {
                let e = big(h.at(i, c));
                if e.is_zero() {
                    continue;
                }
                let a = e.abs();
                match &pivot {
                    Some((_, cur)) if *cur <= a => {}
                    _ => pivot = Some((i, a)),
                }
            }
            let Some((pi, _)) = pivot else {
                break;
            };
            h.swap_rows(r, pi);
            let mut done = true;
            for i in (r + 1)..h.rows() {
                if big(h.at(i, c)).is_zero() {
                    continue;
                }
                let q = Scalar::Int(-(big(h.at(i, c)) / big(h.at(r, c))));
                h.row_addmul(i, r, &q);
                if !big(h.at(i, c)).is_zero() {
                    done = false;
                }
            }
            if done {
                if h.at(r, c).is_negative() {
                    h.negate_row(r);
                }
                for i in 0..r {
                    let q = num_integer::Integer::div_floor(big(h.at(i, c)), big(h.at(r, c)));
                    if !q.is_zero() {
                        h.row_addmul(i, r, &Scalar::Int(-q));
                    }
                }
                r += 1;
                break;
            }
        }
    }
    h
}

/// Expresses `target` as an exact ring-linear combination of `generators`;
/// the coefficient of a generator never leaves the ring, so over Z the
/// answer is integral or `None`.
pub fn solve_in_span(generators: &[Vec<Scalar>], target: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let ring = target
        .first()
        .map(Scalar::ring)
        .or_else(|| generators.first().and_then(|g| g.first().map(Scalar::ring)))
        .unwrap_or(Ring::Q);
    for g in generators {
        if g.len() != target.len() {
            return Err(Error::DimensionMismatch(format!(
                "generator length {} vs target length {}",
                g.len(),
                target.len()
            )));
        }
    }
    if generators.is_empty() {
        return Ok(target.iter().all(Scalar::is_zero).then(Vec::new));
    }
    let g = ExactMatrix::from_columns(ring, target.len(), generators);
    let t = ExactMatrix::from_columns(ring, target.len(), &[target.to_vec()]);
    Ok(g.solve_right(&t).map(|x| x.column(0)))
}

/// Kronecker product with `(A ⊗ B)(v ⊗ w) = Av ⊗ Bw` under the
/// convention `(v ⊗ w)[i * len(w) + j] = v[i] w[j]`.
pub fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch { expected: a.ring(), found: b.ring() });
    }
    Ok(ExactMatrix::from_fn(
        a.ring(),
        a.rows() * b.rows(),
        a.cols() * b.cols(),
        |i, j| a.at(i / b.rows(), j / b.cols()) * b.at(i % b.rows(), j % b.cols()),
    ))
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in matrix product");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = ExactMatrix::zeros(self.ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = &(a * rhs.at(k, j)) + out.at(i, j);
                    out.entries[i * rhs.cols + j] = t;
                }
            }
        }
        out
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({}, {}x{})", self.ring, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for ExactMatrix {
    /// One row per line, entries whitespace-separated: the CLI text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            if i + 1 < self.rows {
                writeln!(f, "{}", row.join(" "))?;
            } else {
                write!(f, "{}", row.join(" "))?;
            }
        }
        Ok(())
    }
}
