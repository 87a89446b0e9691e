//! Lie algebras over GF(2) given by structure constants.
//!
//! Elements are coordinate vectors packed into a single `u64` word (see
//! [`coord_bit`]), so algebras have dimension at most 64. [`BitVector`] entry
//! points are provided for the public API.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::f2linalg::{
    coord_bit, ones64, prefix_mask, BitMatrix, BitVector, Echelon, Echelon64, Mat64, Subspace,
};
use crate::meataxe;
use crate::poly::ExtensionField;

pub const MAX_DIM: usize = 64;

/// A Lie algebra with basis `b_0 .. b_{n-1}` and `[b_i, b_j] = table[i * n + j]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<u64>,
    label: String,
}

/// Axiom violations found by [`validate_table`]. Indices are basis positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// `i` with `[b_i, b_i] != 0`.
    pub alternating: Vec<usize>,
    /// `(i, j)` with `[b_i, b_j] != [b_j, b_i]`.
    pub antisymmetry: Vec<(usize, usize)>,
    /// `(i, j, k)` failing the Jacobi identity.
    pub jacobi: Vec<(usize, usize, usize)>,
    /// Entries with bits outside the first `n` coordinates.
    pub out_of_range: Vec<(usize, usize)>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.alternating.is_empty()
            && self.antisymmetry.is_empty()
            && self.jacobi.is_empty()
            && self.out_of_range.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        let mut parts: Vec<String> = Vec::new();
        if let Some(i) = self.alternating.first() {
            parts.push(format!(
                "alternating fails at [b{i},b{i}] ({} total)",
                self.alternating.len()
            ));
        }
        if let Some((i, j)) = self.antisymmetry.first() {
            parts.push(format!(
                "antisymmetry fails at ({i},{j}) ({} total)",
                self.antisymmetry.len()
            ));
        }
        if let Some((i, j, k)) = self.jacobi.first() {
            parts.push(format!(
                "Jacobi fails at ({i},{j},{k}) ({} total)",
                self.jacobi.len()
            ));
        }
        if let Some((i, j)) = self.out_of_range.first() {
            parts.push(format!("entry ({i},{j}) has coordinates out of range"));
        }
        f.write_str(&parts.join("; "))
    }
}

fn table_bracket(n: usize, table: &[u64], x: u64, y: u64) -> u64 {
    let mut acc = 0;
    for i in ones64(x) {
        let row = &table[i * n..(i + 1) * n];
        for j in ones64(y) {
            acc ^= row[j];
        }
    }
    acc
}

/// Checks the Lie axioms for a raw table of dimension `n`.
pub fn validate_table(n: usize, table: &[u64]) -> AxiomReport {
    let mut report = AxiomReport::default();
    let mask = prefix_mask(n);
    for i in 0..n {
        if table[i * n + i] != 0 {
            report.alternating.push(i);
        }
        for j in 0..n {
            if table[i * n + j] & !mask != 0 {
                report.out_of_range.push((i, j));
            }
            if i < j && table[i * n + j] != table[j * n + i] {
                report.antisymmetry.push((i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let bij = table[i * n + j];
            for k in j + 1..n {
                let a = table_bracket(n, table, bij, coord_bit(k));
                let b = table_bracket(n, table, table[j * n + k], coord_bit(i));
                let c = table_bracket(n, table, table[k * n + i], coord_bit(j));
                if a ^ b ^ c != 0 {
                    report.jacobi.push((i, j, k));
                }
            }
        }
    }
    report
}

impl LieAlgebra {
    /// Builds an algebra from a full bracket table, rejecting axiom violations.
    pub fn from_table(dim: usize, table: Vec<u64>) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: table.len(),
            });
        }
        let report = validate_table(dim, &table);
        if !report.is_valid() {
            return Err(Error::AxiomViolation(format!("{report}")));
        }
        Ok(Self::from_table_trusted(dim, table))
    }

    pub(crate) fn from_table_trusted(dim: usize, table: Vec<u64>) -> Self {
        Self {
            dim,
            table,
            label: String::new(),
        }
    }

    /// Builds an algebra from the brackets `[b_i, b_j] = sum of b_k for k in ks`,
    /// listing each unordered pair at most once.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<usize>)]) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        let mut table = vec![0u64; dim * dim];
        for (i, j, ks) in brackets {
            let (i, j) = (*i, *j);
            for &x in [i, j].iter().chain(ks) {
                if x >= dim {
                    return Err(Error::IndexOutOfRange { index: x, len: dim });
                }
            }
            let mut w = 0u64;
            for &k in ks {
                w ^= coord_bit(k);
            }
            table[i * dim + j] ^= w;
            if i != j {
                table[j * dim + i] ^= w;
            }
        }
        Self::from_table(dim, table)
    }

    pub fn abelian(dim: usize) -> Self {
        assert!(dim <= MAX_DIM);
        Self::from_table_trusted(dim, vec![0; dim * dim])
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// `[b_i, b_j]` as a packed word.
    #[inline]
    pub fn basis_bracket(&self, i: usize, j: usize) -> u64 {
        self.table[i * self.dim + j]
    }

    /// The nonzero brackets `[b_i, b_j]` with `i < j`, as coordinate lists.
    pub fn brackets(&self) -> Vec<(usize, usize, Vec<usize>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.table[i * n + j];
                if w != 0 {
                    out.push((i, j, ones64(w).collect()));
                }
            }
        }
        out
    }

    /// Bracket of packed elements.
    #[inline]
    pub fn bracket_words(&self, x: u64, y: u64) -> u64 {
        table_bracket(self.dim, &self.table, x, y)
    }

    fn check_vec(&self, v: &BitVector) -> Result<u64> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(v.word())
    }

    fn vec_of(&self, w: u64) -> BitVector {
        BitVector::from_word(self.dim, w)
    }

    pub fn bracket(&self, x: &BitVector, y: &BitVector) -> Result<BitVector> {
        let (x, y) = (self.check_vec(x)?, self.check_vec(y)?);
        Ok(self.vec_of(self.bracket_words(x, y)))
    }

    /// Column form of `ad(x)`: column `j` is `[x, b_j]`.
    pub fn ad_map(&self, x: u64) -> Mat64 {
        let n = self.dim;
        let mut cols = vec![0u64; n];
        for i in ones64(x) {
            for (c, &t) in cols.iter_mut().zip(&self.table[i * n..(i + 1) * n]) {
                *c ^= t;
            }
        }
        Mat64::from_cols(cols)
    }

    /// `ad(b_i)` in column form.
    pub fn ad_basis(&self, i: usize) -> Mat64 {
        let n = self.dim;
        Mat64::from_cols(self.table[i * n..(i + 1) * n].to_vec())
    }

    /// The matrix of `h -> [x, h]` acting on column coordinate vectors.
    pub fn ad(&self, x: &BitVector) -> Result<BitMatrix> {
        Ok(self.ad_map(self.check_vec(x)?).to_bitmatrix())
    }

    pub fn validate_axioms(&self) -> AxiomReport {
        validate_table(self.dim, &self.table)
    }

    /// Smallest subalgebra containing `gens` (packed).
    pub fn closure_words(&self, gens: &[u64]) -> Subspace {
        self.closure_over(&Subspace::zero(self.dim), gens)
    }

    /// Smallest subalgebra containing the subalgebra `base` and `gens`.
    pub fn closure_over(&self, base: &Subspace, gens: &[u64]) -> Subspace {
        let n = self.dim;
        let mut ech = Echelon64::new();
        let mut basis: Vec<u64> = Vec::new();
        for &r in base.rows64() {
            ech.insert(r);
            basis.push(r);
        }
        let old = basis.len();
        for &g in gens {
            let g = g & prefix_mask(n);
            if ech.residue(g) != 0 {
                ech.insert(g);
                basis.push(g);
            }
        }
        // brackets among base elements already lie in base
        let mut t = old;
        while t < basis.len() {
            if basis.len() == n {
                break;
            }
            let x = basis[t];
            let adx = self.ad_map(x);
            let mut s = 0;
            while s < t {
                let w = adx.apply(basis[s]);
                if ech.residue(w) != 0 {
                    ech.insert(w);
                    basis.push(w);
                }
                s += 1;
            }
            t += 1;
        }
        ech.to_subspace(n)
    }

    pub fn closure(&self, gens: &[BitVector]) -> Result<Subspace> {
        let words = gens
            .iter()
            .map(|g| self.check_vec(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure_words(&words))
    }

    fn ad_basis_all(&self) -> Vec<Mat64> {
        (0..self.dim).map(|i| self.ad_basis(i)).collect()
    }

    /// Smallest ideal containing `gens` (packed).
    pub fn ideal_closure_words(&self, gens: &[u64]) -> Subspace {
        meataxe::spin(&self.ad_basis_all(), self.dim, gens)
    }

    pub fn ideal_closure(&self, gens: &[BitVector]) -> Result<Subspace> {
        let words = gens
            .iter()
            .map(|g| self.check_vec(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.ideal_closure_words(&words))
    }

    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let rows = s.rows64();
        s.ambient_dim() == self.dim
            && rows.iter().enumerate().all(|(t, &x)| {
                rows[..t]
                    .iter()
                    .all(|&y| s.contains_word(self.bracket_words(x, y)))
            })
    }

    /// True when `[v, i] ⊆ i` for the subalgebra `v`.
    pub fn is_ideal_of(&self, i: &Subspace, v: &Subspace) -> bool {
        v.rows64().iter().all(|&x| {
            i.rows64()
                .iter()
                .all(|&y| i.contains_word(self.bracket_words(x, y)))
        })
    }

    pub fn is_ideal(&self, i: &Subspace) -> bool {
        self.is_ideal_of(i, &Subspace::full(self.dim))
    }

    /// Span of all `[a, b]` with `a` in `x` and `b` in `y`.
    pub fn bracket_spaces(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let mut words = Vec::new();
        for &a in x.rows64() {
            for &b in y.rows64() {
                words.push(self.bracket_words(a, b));
            }
        }
        Subspace::from_words64(self.dim, &words)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_spaces(&full, &full)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|&w| w == 0)
    }

    pub fn is_perfect_subalgebra(&self, v: &Subspace) -> bool {
        self.bracket_spaces(v, v) == *v
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut z = Subspace::full(n);
        for j in 0..n {
            // x -> [x, b_j] has columns [b_i, b_j]
            let cols: Vec<u64> = (0..n).map(|i| self.table[i * n + j]).collect();
            let k = Mat64::from_cols(cols).kernel();
            z = z.intersection(&k).expect("same ambient dimension");
            if z.is_zero() {
                break;
            }
        }
        z
    }

    /// Simple: nonabelian with irreducible adjoint module.
    pub fn is_simple(&self) -> bool {
        !self.is_abelian() && meataxe::is_irreducible(&self.ad_basis_all(), self.dim)
    }

    /// Basis of `v / i` lifted to `v`, in the order used by [`section`](Self::section).
    fn quotient_basis(v: &Subspace, i: &Subspace) -> (Echelon64, Vec<u64>) {
        let mut ech = Echelon64::new();
        for &r in i.rows64() {
            ech.insert(r);
        }
        let mut lifts = Vec::new();
        for &r in v.rows64() {
            if ech.insert(r) {
                lifts.push(r);
            }
        }
        (ech, lifts)
    }

    /// The quotient `v / i` of a subalgebra by one of its ideals.
    pub fn section(&self, v: &Subspace, i: &Subspace) -> Result<LieAlgebra> {
        self.check_space(v)?;
        self.check_space(i)?;
        if !self.is_subalgebra(v) {
            return Err(Error::NotSubalgebra);
        }
        if !v.contains_subspace(i) || !self.is_ideal_of(i, v) {
            return Err(Error::NotIdeal);
        }
        let (ech, lifts) = Self::quotient_basis(v, i);
        let k = i.dim();
        let m = lifts.len();
        let mut table = vec![0u64; m * m];
        for a in 0..m {
            for b in a + 1..m {
                let w = self.bracket_words(lifts[a], lifts[b]);
                let combo = ech.coords(w).expect("subalgebra is closed");
                // drop the coordinates along i, shift the rest down
                let q = combo << k;
                table[a * m + b] = q;
                table[b * m + a] = q;
            }
        }
        Ok(LieAlgebra::from_table_trusted(m, table))
    }

    /// The subalgebra `v` as an algebra in its canonical basis.
    pub fn restrict(&self, v: &Subspace) -> Result<LieAlgebra> {
        self.section(v, &Subspace::zero(self.dim))
    }

    /// Nilpotency of a subalgebra via its lower central series.
    pub fn is_nilpotent_subalgebra(&self, v: &Subspace) -> Result<bool> {
        self.check_space(v)?;
        if !self.is_subalgebra(v) {
            return Err(Error::NotSubalgebra);
        }
        let mut term = v.clone();
        loop {
            if term.is_zero() {
                return Ok(true);
            }
            let next = self.bracket_spaces(v, &term);
            if next == term {
                return Ok(false);
            }
            term = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subalgebra(&Subspace::full(self.dim))
            .expect("the whole algebra is a subalgebra")
    }

    /// `L ⊗ GF(2^k)` as a GF(2)-algebra; `b_i ⊗ t^a` has index `i * k + a`.
    pub fn tensor_extend(&self, k: u32) -> Result<LieAlgebra> {
        let field = ExtensionField::standard(k).ok_or(Error::DimensionTooLarge {
            dim: k as usize,
            max: 8,
        })?;
        self.tensor_with(&field)
    }

    pub fn tensor_with(&self, field: &ExtensionField) -> Result<LieAlgebra> {
        let k = field.degree() as usize;
        let n = self.dim;
        let m = n * k;
        if m > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim: m,
                max: MAX_DIM,
            });
        }
        let mut table = vec![0u64; m * m];
        for i in 0..n {
            for j in 0..n {
                let w = self.table[i * n + j];
                if w == 0 {
                    continue;
                }
                for a in 0..k {
                    for b in 0..k {
                        let prod = field.mul(1 << a, 1 << b);
                        let mut out = 0u64;
                        for l in ones64(w) {
                            for c in 0..k {
                                if prod >> c & 1 == 1 {
                                    out |= coord_bit(l * k + c);
                                }
                            }
                        }
                        table[(i * k + a) * m + j * k + b] = out;
                    }
                }
            }
        }
        let label = if self.label.is_empty() {
            String::new()
        } else {
            format!("{} ⊗ GF(2^{k})", self.label)
        };
        Ok(LieAlgebra::from_table_trusted(m, table).with_label(label))
    }

    /// Embeds `x` of `L` as `x ⊗ 1` in [`tensor_extend`](Self::tensor_extend)`(k)`.
    pub fn tensor_lift(&self, x: u64, k: u32) -> u64 {
        let mut out = 0;
        for i in ones64(x) {
            out |= coord_bit(i * k as usize);
        }
        out
    }

    /// `L1 ⊕ L2`, with the basis of `L1` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        let (n1, n2) = (self.dim, other.dim);
        let m = n1 + n2;
        if m > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim: m,
                max: MAX_DIM,
            });
        }
        let mut table = vec![0u64; m * m];
        for i in 0..n1 {
            for j in 0..n1 {
                table[i * m + j] = self.table[i * n1 + j];
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                table[(n1 + i) * m + n1 + j] = other.table[i * n2 + j] >> n1;
            }
        }
        Ok(LieAlgebra::from_table_trusted(m, table))
    }

    /// The algebra transported along the invertible map `g`: the result has
    /// `[e_i, e_j] = g [g^-1 e_i, g^-1 e_j]`.
    pub fn transport(&self, g: &Mat64) -> Result<LieAlgebra> {
        let inv = g.inverse().ok_or(Error::Singular)?;
        let n = self.dim;
        let mut table = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = g.apply(self.bracket_words(inv.col(i), inv.col(j)));
            }
        }
        Ok(LieAlgebra::from_table_trusted(n, table).with_label(self.label.clone()))
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        if !self.label.is_empty() {
            write!(f, ", {}", self.label)?;
        }
        f.write_str(")")
    }
}

/// A matrix Lie algebra: the span of a set of square matrices closed under
/// `[A, B] = AB + BA`, together with its structure constants.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    pub algebra: LieAlgebra,
    /// Basis matrices, in the order of the algebra's basis.
    pub basis: Vec<BitMatrix>,
}

/// Spans of matrices with coordinates relative to the inserted order.
pub(crate) struct MatrixSpan {
    size: usize,
    ech: Echelon,
    pub(crate) basis: Vec<BitMatrix>,
}

impl MatrixSpan {
    pub(crate) fn new(size: usize) -> Self {
        Self {
            size,
            ech: Echelon::new(size * size),
            basis: Vec::new(),
        }
    }

    /// Adds `m` if independent; errors when more than 64 would be needed.
    pub(crate) fn insert(&mut self, m: BitMatrix) -> Result<bool> {
        let flat = m.flatten();
        if self.ech.coords(flat.words()).is_some() {
            return Ok(false);
        }
        if self.basis.len() == MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim: MAX_DIM + 1,
                max: MAX_DIM,
            });
        }
        self.ech.insert(flat.words());
        self.basis.push(m);
        Ok(true)
    }

    /// Coordinates as a packed word, bit `coord_bit(k)` for basis matrix `k`.
    pub(crate) fn coords(&self, m: &BitMatrix) -> Option<u64> {
        self.ech.coords(m.flatten().words())
    }

    pub(crate) fn structure_constants(&self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let mut table = vec![0u64; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let c = self.basis[i].commutator(&self.basis[j])?;
                let w = self.coords(&c).ok_or(Error::NotSubalgebra)?;
                table[i * n + j] = w;
                table[j * n + i] = w;
            }
        }
        LieAlgebra::from_table(n, table)
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }
}

/// Smallest matrix Lie algebra containing `gens`.
pub fn matrix_lie_closure(gens: &[BitMatrix]) -> Result<MatrixLieAlgebra> {
    let Some(first) = gens.first() else {
        return Ok(MatrixLieAlgebra {
            algebra: LieAlgebra::abelian(0),
            basis: Vec::new(),
        });
    };
    let size = first.rows();
    for g in gens {
        if !g.is_square() {
            return Err(Error::NotSquare {
                rows: g.rows(),
                cols: g.cols(),
            });
        }
        if g.rows() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: g.rows(),
            });
        }
    }
    let mut span = MatrixSpan::new(size);
    for g in gens {
        span.insert(g.clone())?;
    }
    let mut t = 0;
    while t < span.basis.len() {
        for s in 0..t {
            let c = span.basis[s].commutator(&span.basis[t])?;
            span.insert(c)?;
        }
        t += 1;
    }
    debug_assert_eq!(span.size(), size);
    let algebra = span.structure_constants()?;
    Ok(MatrixLieAlgebra {
        algebra,
        basis: span.basis,
    })
}
