//! Strictly finite commutative algebras given by structure constants.
//!
//! A [`FiniteAlgebra`] stores `e_i * e_j` for every pair of basis vectors and
//! derives everything else from that table: multiplication operators, the
//! trace form and its discriminant, minimal polynomials, idempotents attached
//! to an element, splittings along an idempotent and finite products.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::unipoly::UniPoly;

/// Associativity is checked on every basis triple up to this dimension; the
/// check costs `m^5` field operations, so larger tables are trusted unless
/// [`FiniteAlgebra::check_associative`] is called explicitly.
pub const EAGER_ASSOCIATIVITY_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement(Vec<Scalar>);

impl AlgebraElement {
    pub fn new(coords: Vec<Scalar>) -> Self {
        AlgebraElement(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    generators: Vec<(String, Vec<Scalar>)>,
    basis_traces: Vec<Scalar>,
}

/// Result of [`FiniteAlgebra::split_by_idempotent`]: `A = (1 - e)A x eA`.
#[derive(Clone, Debug)]
pub struct IdempotentSplit {
    /// `(1 - e)A`.
    pub complement: FiniteAlgebra,
    /// `eA`.
    pub component: FiniteAlgebra,
    /// Columns are the basis of `(1 - e)A` in coordinates of `A`.
    pub complement_embedding: Matrix,
    /// Columns are the basis of `eA` in coordinates of `A`.
    pub component_embedding: Matrix,
    /// `v -> (1 - e)v` in the basis of `(1 - e)A`.
    pub complement_projection: Matrix,
    /// `v -> ev` in the basis of `eA`.
    pub component_projection: Matrix,
}

impl FiniteAlgebra {
    /// Builds and validates an algebra. `table[i][j]` holds the coordinates
    /// of `e_i * e_j`.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        generators: Vec<(String, Vec<Scalar>)>,
    ) -> Result<Self> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        let check_len = |len: usize| {
            if len == m {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: m, got: len })
            }
        };
        check_len(table.len())?;
        check_len(unit.len())?;
        for row in &table {
            check_len(row.len())?;
            for v in row {
                check_len(v.len())?;
            }
        }
        for (_, g) in &generators {
            check_len(g.len())?;
        }
        let basis_traces = (0..m)
            .map(|i| (0..m).fold(field.zero(), |acc, k| &acc + &table[i][k][k]))
            .collect();
        let alg = FiniteAlgebra {
            field,
            labels,
            table,
            unit,
            generators,
            basis_traces,
        };
        alg.check_commutative()?;
        alg.check_unit()?;
        if m <= EAGER_ASSOCIATIVITY_LIMIT {
            alg.check_associative()?;
        }
        Ok(alg)
    }

    fn check_commutative(&self) -> Result<()> {
        let m = self.dimension();
        for i in 0..m {
            for j in i + 1..m {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::InvalidStructure(format!("commutativity at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        let unit = AlgebraElement(self.unit.clone());
        for i in 0..self.dimension() {
            let e = self.basis_element(i);
            if self.mul(&unit, &e)? != e {
                return Err(Error::InvalidStructure(format!("unit law at {i}")));
            }
        }
        Ok(())
    }

    /// `(e_i e_j) e_k = e_i (e_j e_k)` for every basis triple.
    pub fn check_associative(&self) -> Result<()> {
        let m = self.dimension();
        for i in 0..m {
            for j in i..m {
                let ij = AlgebraElement(self.table[i][j].clone());
                for k in 0..m {
                    let left = self.mul_basis(&ij, k);
                    let jk = AlgebraElement(self.table[j][k].clone());
                    let right = self.mul_basis(&jk, i);
                    if left != right {
                        return Err(Error::InvalidStructure(format!(
                            "associativity at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    pub fn generators(&self) -> Vec<(String, AlgebraElement)> {
        self.generators
            .iter()
            .map(|(n, v)| (n.clone(), AlgebraElement(v.clone())))
            .collect()
    }

    pub fn generator(&self, name: &str) -> Option<AlgebraElement> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| AlgebraElement(v.clone()))
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut v = vec![self.field.zero(); self.dimension()];
        v[i] = self.field.one();
        AlgebraElement(v)
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        (0..self.dimension()).map(|i| self.basis_element(i)).collect()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement(vec![self.field.zero(); self.dimension()])
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement(self.unit.clone())
    }

    pub fn scalar(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement(self.unit.iter().map(|u| u * c).collect())
    }

    pub fn check_element(&self, a: &AlgebraElement) -> Result<()> {
        if a.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: a.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, a: &AlgebraElement, c: &Scalar) -> AlgebraElement {
        AlgebraElement(a.0.iter().map(|x| x * c).collect())
    }

    /// `a * e_k`.
    fn mul_basis(&self, a: &AlgebraElement, k: usize) -> AlgebraElement {
        let mut out = vec![self.field.zero(); self.dimension()];
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&self.table[i][k]) {
                if !c.is_zero() {
                    *o = &*o + &(ai * c);
                }
            }
        }
        AlgebraElement(out)
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        let m = self.dimension();
        let mut out = vec![self.field.zero(); m];
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for (o, c) in out.iter_mut().zip(&self.table[i][j]) {
                    if !c.is_zero() {
                        *o = &*o + &(&ab * c);
                    }
                }
            }
        }
        Ok(AlgebraElement(out))
    }

    pub fn pow(&self, a: &AlgebraElement, e: u64) -> Result<AlgebraElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Matrix of `b -> a * b`; column `j` holds `a * e_j`.
    pub fn mul_operator(&self, a: &AlgebraElement) -> Result<Matrix> {
        self.check_element(a)?;
        let columns: Vec<Vec<Scalar>> = (0..self.dimension()).map(|j| self.mul_basis(a, j).0).collect();
        Ok(Matrix::from_columns(self.field, self.dimension(), &columns))
    }

    pub fn trace(&self, a: &AlgebraElement) -> Result<Scalar> {
        self.check_element(a)?;
        Ok(a.0
            .iter()
            .zip(&self.basis_traces)
            .fold(self.field.zero(), |acc, (x, t)| &acc + &(x * t)))
    }

    /// Gram matrix `Tr(e_i e_j)` of the trace form.
    pub fn trace_form(&self) -> Matrix {
        let m = self.dimension();
        let mut g = Matrix::zeros(self.field, m, m);
        for i in 0..m {
            for j in i..m {
                let t = self.table[i][j]
                    .iter()
                    .zip(&self.basis_traces)
                    .fold(self.field.zero(), |acc, (c, t)| &acc + &(c * t));
                g[(i, j)] = t.clone();
                g[(j, i)] = t;
            }
        }
        g
    }

    pub fn discriminant(&self) -> Scalar {
        self.trace_form().determinant()
    }

    /// Invertible discriminant.
    pub fn is_etale(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// Over the perfect bases supported here, reduced and étale coincide for
    /// strictly finite algebras.
    pub fn is_reduced(&self) -> bool {
        self.is_etale()
    }

    /// Monic generator of the annihilator of `a`, from the first linear
    /// dependence among `1, a, a^2, ...`.
    pub fn minimal_polynomial(&self, a: &AlgebraElement) -> Result<UniPoly> {
        self.check_element(a)?;
        let m = self.dimension();
        let k = self.field;
        // rows: (reduced vector, pivot, combination of powers)
        let mut rows: Vec<(Vec<Scalar>, usize, Vec<Scalar>)> = Vec::new();
        let mut power = self.one();
        for deg in 0..=m {
            let mut v = power.0.clone();
            let mut combo = vec![k.zero(); m + 1];
            combo[deg] = k.one();
            for (row, pivot, rc) in &rows {
                let f = v[*pivot].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &(&f * y);
                }
                for (x, y) in combo.iter_mut().zip(rc) {
                    *x = &*x - &(&f * y);
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => {
                    combo.truncate(deg + 1);
                    return Ok(UniPoly::new(k, combo));
                }
                Some(p) => {
                    let inv = v[p].inv()?;
                    let v: Vec<Scalar> = v.iter().map(|x| x * &inv).collect();
                    let combo: Vec<Scalar> = combo.iter().map(|x| x * &inv).collect();
                    rows.push((v, p, combo));
                }
            }
            power = self.mul(&power, a)?;
        }
        unreachable!("m + 1 powers in an m-dimensional space are dependent")
    }

    /// The idempotent `e` of `K[a]` with `<a> = <e>`.
    pub fn idempotent_of(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let g = self.minimal_polynomial(a)?;
        if !g.coeff(0).is_zero() {
            return Ok(self.one());
        }
        let h = g.exact_div(&UniPoly::monomial(self.field.one(), 1));
        let h0 = h.coeff(0);
        if h0.is_zero() {
            let witness = self.mul(a, &h.eval_in_algebra(a, self)?)?;
            return Err(Error::RepeatedZeroRoot {
                witness: witness.to_strings(),
            });
        }
        // e = 1 - h(a)/h(0) = a * q(a) with q = -(h - h(0)) / (T h(0))
        let h0_inv = h0.inv()?;
        let q = (&h - &UniPoly::constant(h0.clone()))
            .exact_div(&UniPoly::monomial(self.field.one(), 1))
            .scale(&-&h0_inv);
        let qa = q.eval_in_algebra(a, self)?;
        let e = self.mul(a, &qa)?;
        let ha = h.eval_in_algebra(a, self)?;
        let direct = self.sub(&self.one(), &self.scale(&ha, &h0_inv));
        if e != direct || self.mul(&e, &e)? != e || self.mul(a, &e)? != *a {
            return Err(Error::InternalContradiction(
                "idempotent of an element failed its own checks".into(),
            ));
        }
        Ok(e)
    }

    /// `a^{-1}` written as a polynomial in `a`.
    pub fn inverse_in_subalgebra(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let g = self.minimal_polynomial(a)?;
        let g0 = g.coeff(0);
        if g0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let q = (&g - &UniPoly::constant(g0.clone()))
            .exact_div(&UniPoly::monomial(self.field.one(), 1))
            .scale(&-&g0.inv()?);
        let inv = q.eval_in_algebra(a, self)?;
        if self.mul(a, &inv)? != self.one() {
            return Err(Error::InternalContradiction("inverse check failed".into()));
        }
        Ok(inv)
    }

    pub fn is_idempotent(&self, e: &AlgebraElement) -> Result<bool> {
        Ok(self.mul(e, e)? == *e)
    }

    /// Basis of `xA`, deterministic (reduced echelon), as columns in `A` coordinates.
    fn ideal_basis(&self, x: &AlgebraElement) -> Result<Matrix> {
        let op = self.mul_operator(x)?;
        let (r, pivots) = op.transpose().rref();
        let cols: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Matrix::from_columns(self.field, self.dimension(), &cols))
    }

    /// The algebra `eA` (with unit `e`) and the maps tying it to `A`.
    fn corner(&self, e: &AlgebraElement, prefix: &str) -> Result<(FiniteAlgebra, Matrix, Matrix)> {
        let basis = self.ideal_basis(e)?;
        let d = basis.cols();
        let coords = |v: &AlgebraElement| -> Result<Vec<Scalar>> {
            basis
                .solve(v.coords())
                .ok_or_else(|| Error::InternalContradiction("vector outside the ideal".into()))
        };
        let cols: Vec<AlgebraElement> = (0..d).map(|j| AlgebraElement(basis.column(j))).collect();
        let mut table = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in i..d {
                let v = coords(&self.mul(&cols[i], &cols[j])?)?;
                table[i][j] = v.clone();
                table[j][i] = v;
            }
        }
        let unit = coords(e)?;
        let generators = self
            .generators
            .iter()
            .map(|(n, g)| Ok((n.clone(), coords(&self.mul(e, &AlgebraElement(g.clone()))?)?)))
            .collect::<Result<Vec<_>>>()?;
        let labels = (0..d).map(|i| format!("{prefix}{i}")).collect();
        let alg = FiniteAlgebra::new(self.field, labels, table, unit, generators)?;
        let projection_cols = (0..self.dimension())
            .map(|k| coords(&self.mul(e, &self.basis_element(k))?))
            .collect::<Result<Vec<_>>>()?;
        let projection = Matrix::from_columns(self.field, d, &projection_cols);
        Ok((alg, basis, projection))
    }

    /// `A = (1 - e)A x eA` for a nontrivial idempotent `e`.
    pub fn split_by_idempotent(&self, e: &AlgebraElement) -> Result<IdempotentSplit> {
        self.check_element(e)?;
        if !self.is_idempotent(e)? {
            return Err(Error::NotIdempotent);
        }
        if e.is_zero() || *e == self.one() {
            return Err(Error::TrivialIdempotent);
        }
        let f = self.sub(&self.one(), e);
        let (complement, complement_embedding, complement_projection) = self.corner(&f, "u")?;
        let (component, component_embedding, component_projection) = self.corner(e, "v")?;
        if complement.dimension() + component.dimension() != self.dimension() {
            return Err(Error::InternalContradiction("split dimensions do not add up".into()));
        }
        Ok(IdempotentSplit {
            complement,
            component,
            complement_embedding,
            component_embedding,
            complement_projection,
            component_projection,
        })
    }

    /// `A1 x A2` with block-diagonal structure constants.
    pub fn product(a1: &FiniteAlgebra, a2: &FiniteAlgebra) -> Result<FiniteAlgebra> {
        if a1.field != a2.field {
            return Err(Error::FieldMismatch);
        }
        let k = a1.field;
        let (m1, m2) = (a1.dimension(), a2.dimension());
        let m = m1 + m2;
        let embed = |v: &[Scalar], offset: usize| {
            let mut out = vec![k.zero(); m];
            for (i, x) in v.iter().enumerate() {
                out[offset + i] = x.clone();
            }
            out
        };
        let mut table = vec![vec![vec![k.zero(); m]; m]; m];
        for (row, src) in table.iter_mut().zip(&a1.table) {
            for (cell, v) in row.iter_mut().zip(src) {
                *cell = embed(v, 0);
            }
        }
        for i in 0..m2 {
            for j in 0..m2 {
                table[m1 + i][m1 + j] = embed(&a2.table[i][j], m1);
            }
        }
        let mut unit = embed(&a1.unit, 0);
        for (i, u) in a2.unit.iter().enumerate() {
            unit[m1 + i] = u.clone();
        }
        let labels = a1
            .labels
            .iter()
            .map(|l| format!("({l}, 0)"))
            .chain(a2.labels.iter().map(|l| format!("(0, {l})")))
            .collect();
        let generators = a1
            .generators
            .iter()
            .map(|(n, v)| (format!("({n}, 0)"), embed(v, 0)))
            .chain(a2.generators.iter().map(|(n, v)| (format!("(0, {n})"), embed(v, m1))))
            .collect();
        FiniteAlgebra::new(k, labels, table, unit, generators)
    }

    /// `K[T]/<f>` on the basis `1, x, ..., x^{d-1}`.
    pub fn monogenic(f: &UniPoly) -> Result<FiniteAlgebra> {
        let d = match f.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(d) => d,
        };
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let k = f.field();
        let reduce = |e: usize| -> Vec<Scalar> {
            let r = UniPoly::monomial(k.one(), e).rem(f);
            (0..d).map(|i| r.coeff(i)).collect()
        };
        let powers: Vec<Vec<Scalar>> = (0..2 * d - 1).map(reduce).collect();
        let table = (0..d)
            .map(|i| (0..d).map(|j| powers[i + j].clone()).collect())
            .collect();
        let labels = (0..d)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let generators = if d > 1 {
            vec![("x".to_string(), powers[1].clone())]
        } else {
            vec![("x".to_string(), powers[1 % (2 * d - 1)].clone())]
        };
        FiniteAlgebra::new(k, labels, table, powers[0].clone(), generators)
    }

    pub fn display_element(&self, a: &AlgebraElement) -> String {
        let terms: Vec<(Scalar, String)> = a
            .0
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| (c.clone(), if l == "1" { String::new() } else { l.clone() }))
            .collect();
        crate::field::format_sum(&terms)
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basis: {}", self.labels.join(", "))?;
        for i in 0..self.dimension() {
            for j in i..self.dimension() {
                let prod = AlgebraElement(self.table[i][j].clone());
                writeln!(
                    f,
                    "{} * {} = {}",
                    self.labels[i],
                    self.labels[j],
                    self.display_element(&prod)
                )?;
            }
        }
        Ok(())
    }
}
