//! Jacobians, the module of Kähler differentials and the smoothness tests.
//!
//! For `A = K[X_1..X_n]/<f_1..f_s>` the module `Omega_{A/K}` is the cokernel of
//! the transposed Jacobian `Ja` (an `n x s` matrix over `A`). Every decision
//! procedure here reduces to one question, "is `1` in `I + <some polynomials>`",
//! answered by a Gröbner basis; a [`Decision`] records which polynomials were
//! adjoined so the answer can be certified afterwards.

use std::cell::OnceCell;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::finalg::{AlgebraElement, FiniteAlgebra};
use crate::groebner::{unit_certificate, GroebnerBasis, GroebnerOptions};
use crate::linalg::Matrix;
use crate::multipoly::{MultiPoly, PolyRing};

/// `K[X_1..X_n]/<f_1..f_s>`.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    ring: Arc<PolyRing>,
    relations: Vec<MultiPoly>,
}

impl AlgebraPresentation {
    pub fn new(ring: Arc<PolyRing>, relations: Vec<MultiPoly>) -> Result<Self> {
        if relations.iter().any(|f| f.ring().as_ref() != ring.as_ref()) {
            return Err(Error::RingMismatch);
        }
        Ok(AlgebraPresentation { ring, relations })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn variables(&self) -> &[String] {
        self.ring.vars()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn nrelations(&self) -> usize {
        self.relations.len()
    }

    pub fn groebner(&self, options: GroebnerOptions) -> Result<GroebnerBasis> {
        GroebnerBasis::compute(&self.ring, &self.relations, options)
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{}[{}]/<{}>",
            self.field(),
            self.variables().join(", "),
            rels.join(", ")
        )
    }
}

/// `Omega_{A/K}` as the cokernel of `Ja`: generators `dX_i`, one relation per column.
#[derive(Clone, Debug)]
pub struct DifferentialPresentation {
    ambient: AlgebraPresentation,
    table: Vec<Vec<MultiPoly>>,
}

impl DifferentialPresentation {
    pub fn ambient(&self) -> &AlgebraPresentation {
        &self.ambient
    }

    /// Names of the generators `dX_1 .. dX_n`.
    pub fn generators(&self) -> Vec<String> {
        self.ambient.variables().iter().map(|v| format!("d{v}")).collect()
    }

    /// `n x s`; entry `(i, j)` is `df_j/dX_i`.
    pub fn relation_table(&self) -> &[Vec<MultiPoly>] {
        &self.table
    }

    /// Column `j` of `Ja`, the relation `d(f_j) = 0`.
    pub fn relation(&self, j: usize) -> Vec<MultiPoly> {
        self.table.iter().map(|row| row[j].clone()).collect()
    }

    /// Human-readable relation `sum_i (df_j/dX_i) dX_i`.
    pub fn display_relation(&self, j: usize) -> String {
        display_differential(&self.relation(j), &self.generators())
    }
}

/// Renders `sum_i c_i * g_i` with polynomial coefficients.
pub fn display_differential(coords: &[MultiPoly], gens: &[String]) -> String {
    let parts: Vec<String> = coords
        .iter()
        .zip(gens)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, g)| {
            if c.num_terms() == 1 && c.constant_value().is_some_and(|v| v.is_one()) {
                g.clone()
            } else if c.num_terms() == 1 {
                format!("{c}*{g}")
            } else {
                format!("({c})*{g}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// `s x n`; entry `(i, j)` is `df_i/dX_j`.
pub fn jacobian(p: &AlgebraPresentation) -> Vec<Vec<MultiPoly>> {
    p.relations
        .iter()
        .map(|f| {
            (0..p.nvars())
                .map(|j| f.partial_derivative(j).expect("index in range"))
                .collect()
        })
        .collect()
}

pub fn omega_presentation(p: &AlgebraPresentation) -> DifferentialPresentation {
    let jac = jacobian(p);
    let table = (0..p.nvars())
        .map(|i| jac.iter().map(|row| row[i].clone()).collect())
        .collect();
    DifferentialPresentation {
        ambient: p.clone(),
        table,
    }
}

/// `dg = sum_i (dg/dX_i) dX_i`, coordinates taken modulo the relations of `d`.
pub fn universal_derivation(g: &MultiPoly, d: &DifferentialPresentation) -> Result<Vec<MultiPoly>> {
    if g.ring().as_ref() != d.ambient.ring.as_ref() {
        return Err(Error::RingMismatch);
    }
    (0..d.ambient.nvars()).map(|i| g.partial_derivative(i)).collect()
}

/// Laplace expansion; the empty determinant is `1`.
pub fn determinant(ring: &Arc<PolyRing>, m: &[Vec<MultiPoly>]) -> MultiPoly {
    fn go(ring: &Arc<PolyRing>, m: &[Vec<MultiPoly>], row: usize, cols: &mut Vec<usize>) -> MultiPoly {
        if row == m.len() {
            return MultiPoly::one(ring);
        }
        let mut acc = MultiPoly::zero(ring);
        for pos in 0..cols.len() {
            let c = cols[pos];
            if m[row][c].is_zero() {
                continue;
            }
            cols.remove(pos);
            let sub = go(ring, m, row + 1, cols);
            cols.insert(pos, c);
            let term = &m[row][c] * &sub;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let mut cols: Vec<usize> = (0..m.first().map_or(0, Vec::len)).collect();
    go(ring, m, 0, &mut cols)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All `k x k` minors of a `rows x cols` matrix; empty when `k` exceeds a side.
pub fn minors(ring: &Arc<PolyRing>, m: &[Vec<MultiPoly>], cols: usize, k: usize) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for rs in combinations(m.len(), k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<MultiPoly>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            out.push(determinant(ring, &sub));
        }
    }
    out
}

/// Proof that `1` is or is not in the tested ideal.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// `sum cofactors_i * generators_i = 1`.
    Bezout {
        generators: Vec<MultiPoly>,
        cofactors: Vec<MultiPoly>,
    },
    /// Reduced Gröbner basis of the tested ideal, which does not contain `1`.
    FailedIdeal { basis: Vec<MultiPoly> },
    /// The shape of the presentation rules the property out before any ideal test.
    Shape { reason: String },
}

impl Certificate {
    /// Rechecks a Bézout identity by expansion; other kinds hold by construction.
    pub fn verify(&self) -> bool {
        match self {
            Certificate::Bezout { generators, cofactors } => {
                let Some(ring) = generators.first().map(|g| g.ring().clone()) else {
                    return false;
                };
                let sum = generators
                    .iter()
                    .zip(cofactors)
                    .fold(MultiPoly::zero(&ring), |acc, (g, c)| &acc + &(g * c));
                sum == MultiPoly::one(&ring)
            }
            Certificate::FailedIdeal { basis } => !basis.iter().any(|b| b.constant_value().is_some_and(|c| !c.is_zero())),
            Certificate::Shape { .. } => true,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Bezout { generators, cofactors } => {
                let parts: Vec<String> = generators
                    .iter()
                    .zip(cofactors)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(g, c)| format!("({c})*({g})"))
                    .collect();
                write!(f, "1 = {}", parts.join(" + "))
            }
            Certificate::FailedIdeal { basis } => {
                let parts: Vec<String> = basis.iter().map(ToString::to_string).collect();
                write!(f, "1 not in <{}>", parts.join(", "))
            }
            Certificate::Shape { reason } => write!(f, "{reason}"),
        }
    }
}

/// Outcome of one test: `holds` iff `1` lies in `<relations> + <adjoined>`
/// (and the shape condition is met).
#[derive(Clone, Debug)]
pub struct Decision {
    pub holds: bool,
    /// The quotient is the zero ring, so the property holds vacuously.
    pub trivial: bool,
    /// Reason the shape of the presentation excludes the property, if any.
    pub shape_failure: Option<String>,
    /// Minors or determinants adjoined to the relations.
    pub adjoined: Vec<MultiPoly>,
    /// Reduced Gröbner basis of the tested ideal when it is proper.
    pub failed_ideal: Option<Vec<MultiPoly>>,
}

impl Decision {
    /// Bézout cofactors when the property holds, the failed ideal otherwise.
    pub fn certificate(&self, p: &AlgebraPresentation, options: GroebnerOptions) -> Result<Certificate> {
        if let Some(reason) = &self.shape_failure {
            if !self.trivial {
                return Ok(Certificate::Shape { reason: reason.clone() });
            }
        }
        if let Some(basis) = &self.failed_ideal {
            return Ok(Certificate::FailedIdeal { basis: basis.clone() });
        }
        let mut generators = p.relations.clone();
        if !self.trivial {
            generators.extend(self.adjoined.iter().cloned());
        }
        match unit_certificate(&p.ring, &generators, options)? {
            Some(cofactors) => Ok(Certificate::Bezout { generators, cofactors }),
            None => Ok(Certificate::FailedIdeal {
                basis: GroebnerBasis::compute(&p.ring, &generators, options)?
                    .generators()
                    .to_vec(),
            }),
        }
    }
}

/// Shared state for the four tests: the Gröbner basis of the relations is
/// computed once.
#[derive(Clone, Debug)]
pub struct SmoothnessTests<'a> {
    presentation: &'a AlgebraPresentation,
    options: GroebnerOptions,
    basis: GroebnerBasis,
    ja: Vec<Vec<MultiPoly>>,
    algebra: OnceCell<FiniteAlgebra>,
}

impl<'a> SmoothnessTests<'a> {
    pub fn new(presentation: &'a AlgebraPresentation, options: GroebnerOptions) -> Result<Self> {
        let basis = presentation.groebner(options)?;
        let ja = omega_presentation(presentation).table;
        Ok(SmoothnessTests {
            presentation,
            options,
            basis,
            ja,
            algebra: OnceCell::new(),
        })
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// The quotient algebra, built once; needs a zero-dimensional ideal.
    pub fn quotient_algebra(&self) -> Result<&FiniteAlgebra> {
        if let Some(a) = self.algebra.get() {
            return Ok(a);
        }
        let a = self.basis.quotient_algebra()?;
        Ok(self.algebra.get_or_init(|| a))
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.contains_one()
    }

    fn decide(&self, shape_failure: Option<String>, adjoined: Vec<MultiPoly>) -> Result<Decision> {
        let trivial = self.is_trivial();
        let mut failed_ideal = None;
        let holds = if trivial {
            true
        } else if shape_failure.is_some() {
            false
        } else {
            let mut gens = self.basis.generators().to_vec();
            for a in &adjoined {
                let r = self.basis.normal_form(a)?;
                if !r.is_zero() {
                    gens.push(r);
                }
            }
            let gb = GroebnerBasis::compute(self.basis.ring(), &gens, self.options)?;
            if !gb.contains_one() {
                failed_ideal = Some(gb.generators().to_vec());
            }
            failed_ideal.is_none()
        };
        Ok(Decision {
            holds,
            trivial,
            shape_failure,
            adjoined,
            failed_ideal,
        })
    }

    fn shape(&self) -> (usize, usize) {
        (self.presentation.nvars(), self.presentation.nrelations())
    }

    /// `Omega = 0`: `1 in I + D_n(Ja)`.
    pub fn nette(&self) -> Result<Decision> {
        let (n, s) = self.shape();
        if s < n {
            return self.decide(Some(format!("{s} relations < {n} variables: no {n}x{n} minors")), vec![]);
        }
        let ring = self.presentation.ring();
        self.decide(None, minors(ring, &self.ja, s, n))
    }

    /// `s <= n` and the top-left `s x s` minor of `Ja` is a unit in `A`.
    pub fn standard_smooth(&self) -> Result<Decision> {
        let (n, s) = self.shape();
        if s > n {
            return self.decide(Some(format!("{s} relations > {n} variables")), vec![]);
        }
        let block: Vec<Vec<MultiPoly>> = self.ja[..s].iter().map(|row| row[..s].to_vec()).collect();
        self.decide(None, vec![determinant(self.presentation.ring(), &block)])
    }

    /// `1 in I + D_s(Ja)`.
    pub fn elementary_smooth(&self) -> Result<Decision> {
        let (n, s) = self.shape();
        if s > n {
            return self.decide(Some(format!("{s} relations > {n} variables: no {s}x{s} minors")), vec![]);
        }
        let ring = self.presentation.ring();
        self.decide(None, minors(ring, &self.ja, s, s))
    }

    /// `s = n` and `det Ja` is a unit in `A`.
    pub fn standard_etale(&self) -> Result<Decision> {
        let (n, s) = self.shape();
        if s != n {
            return self.decide(Some(format!("{s} relations != {n} variables")), vec![]);
        }
        self.decide(None, vec![determinant(self.presentation.ring(), &self.ja)])
    }

    /// `dim_K Omega_{A/K}` for a zero-dimensional quotient.
    pub fn omega_dimension(&self) -> Result<usize> {
        if self.is_trivial() {
            return Ok(0);
        }
        let basis = self.basis.standard_monomials()?;
        let alg = self.quotient_algebra()?;
        let (n, s) = self.shape();
        let m = basis.len();
        let field = self.presentation.field();
        let entries: Vec<Vec<_>> = self
            .ja
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| Ok(AlgebraElement::new(self.basis.coordinates(e, &basis)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        // image spanned by b_l * (column j), flattened over the n coordinates
        let mut rows = Vec::with_capacity(m * s);
        for j in 0..s {
            for l in 0..m {
                let b = alg.basis_element(l);
                let mut v = Vec::with_capacity(m * n);
                for row in &entries {
                    v.extend(alg.mul(&b, &row[j])?.into_coords());
                }
                rows.push(v);
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(field, rows).rank()
        };
        Ok(m * n - rank)
    }
}

pub fn is_nette(p: &AlgebraPresentation, options: GroebnerOptions) -> Result<bool> {
    Ok(SmoothnessTests::new(p, options)?.nette()?.holds)
}

pub fn is_standard_smooth(p: &AlgebraPresentation, options: GroebnerOptions) -> Result<bool> {
    Ok(SmoothnessTests::new(p, options)?.standard_smooth()?.holds)
}

pub fn is_elementary_smooth(p: &AlgebraPresentation, options: GroebnerOptions) -> Result<bool> {
    Ok(SmoothnessTests::new(p, options)?.elementary_smooth()?.holds)
}

pub fn is_standard_etale(p: &AlgebraPresentation, options: GroebnerOptions) -> Result<bool> {
    Ok(SmoothnessTests::new(p, options)?.standard_etale()?.holds)
}

pub fn omega_dimension(p: &AlgebraPresentation, options: GroebnerOptions) -> Result<usize> {
    SmoothnessTests::new(p, options)?.omega_dimension()
}
