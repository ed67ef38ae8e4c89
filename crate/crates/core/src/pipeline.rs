//! End-to-end classification of a presentation.
//!
//! [`classify`] decides triviality, the four Jacobian tests and the Noether
//! dimension; for zero-dimensional inputs it builds the quotient algebra,
//! decides étaleness through the trace discriminant, and either certifies a
//! product decomposition into monogenic separable factors or exhibits a
//! nonzero nilpotent.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::finalg::{AlgebraElement, FiniteAlgebra};
use crate::groebner::GroebnerOptions;
use crate::kaehler::{omega_presentation, AlgebraPresentation, Decision, SmoothnessTests};
use crate::linalg::Matrix;
use crate::unipoly::UniPoly;

pub const DEFAULT_PRIMITIVE_BUDGET: usize = 1000;

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub groebner: GroebnerOptions,
    /// Linear combinations tried by the primitive-element search.
    pub primitive_budget: usize,
    /// Attach Bézout identities, failed ideals and idempotents to the report.
    pub certificates: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            groebner: GroebnerOptions::default(),
            primitive_budget: DEFAULT_PRIMITIVE_BUDGET,
            certificates: false,
        }
    }
}

/// One factor `K[T]/<g>` of an étale algebra, embedded as `eA` with `e`
/// the idempotent and `b` a generator of `eA` annihilated by `g`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub polynomial: UniPoly,
    pub generator: AlgebraElement,
    pub idempotent: AlgebraElement,
    /// Idempotents of the successive splittings that isolated this factor,
    /// outermost first, in coordinates of the input algebra.
    pub chain: Vec<AlgebraElement>,
}

#[derive(Clone, Debug)]
pub struct DecompositionCertificate {
    pub factors: Vec<Factor>,
    pub notes: Vec<String>,
}

fn contradiction<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InternalContradiction(msg.into()))
}

impl DecompositionCertificate {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| f.polynomial.degree().unwrap_or(0))
            .collect()
    }

    /// Rechecks every claim against `a`: a fundamental system of orthogonal
    /// idempotents, separable factors of the right total degree, `g_i(b_i) = 0`
    /// in `e_i A` with `b_i` generating it, and a nonzero discriminant for the
    /// product of the monogenic factors.
    pub fn verify(&self, a: &FiniteAlgebra) -> Result<()> {
        let mut sum = a.zero();
        for (i, fi) in self.factors.iter().enumerate() {
            if !a.is_idempotent(&fi.idempotent)? || fi.idempotent.is_zero() {
                return contradiction(format!("factor {i}: idempotent check failed"));
            }
            for fj in &self.factors[i + 1..] {
                if !a.mul(&fi.idempotent, &fj.idempotent)?.is_zero() {
                    return contradiction("idempotents are not orthogonal");
                }
            }
            sum = a.add(&sum, &fi.idempotent);
        }
        if sum != a.one() {
            return contradiction("idempotents do not sum to 1");
        }
        if self.degrees().iter().sum::<usize>() != a.dimension() {
            return contradiction("factor degrees do not add up to the dimension");
        }
        let mut product: Option<FiniteAlgebra> = None;
        for (i, f) in self.factors.iter().enumerate() {
            let g = &f.polynomial;
            if !g.is_monic() || !g.is_separable()? {
                return contradiction(format!("factor {i}: {} is not monic separable", g.display_in("T")));
            }
            let d = g.degree().unwrap_or(0);
            let rank = a.mul_operator(&f.idempotent)?.rank();
            if rank != d {
                return contradiction(format!("factor {i}: dim eA = {rank}, deg g = {d}"));
            }
            if a.mul(&f.generator, &f.idempotent)? != f.generator {
                return contradiction(format!("factor {i}: generator outside eA"));
            }
            // g(b) in eA, whose unit is e; powers e, b, .., b^{d-1} must be independent
            let mut powers = vec![f.idempotent.clone()];
            for _ in 0..d {
                let next = a.mul(powers.last().expect("nonempty"), &f.generator)?;
                powers.push(next);
            }
            let value = g
                .coeffs()
                .iter()
                .zip(&powers)
                .fold(a.zero(), |acc, (c, p)| a.add(&acc, &a.scale(p, c)));
            if !value.is_zero() {
                return contradiction(format!("factor {i}: g(b) != 0"));
            }
            let cols: Vec<Vec<Scalar>> = powers[..d].iter().map(|p| p.coords().to_vec()).collect();
            if Matrix::from_columns(a.field(), a.dimension(), &cols).rank() != d {
                return contradiction(format!("factor {i}: b does not generate eA"));
            }
            let m = FiniteAlgebra::monogenic(g)?;
            product = Some(match product {
                None => m,
                Some(p) => FiniteAlgebra::product(&p, &m)?,
            });
        }
        if let Some(p) = product {
            if p.discriminant().is_zero() {
                return contradiction("product of the factors has zero discriminant");
            }
        }
        Ok(())
    }
}

/// Tuples of alphabet indices ordered by their largest entry, then
/// lexicographically; the all-zero tuple is skipped.
struct LevelTuples {
    k: usize,
    alphabet: Option<usize>,
    level: usize,
    cur: Vec<usize>,
    started: bool,
}

impl LevelTuples {
    fn new(k: usize, alphabet: Option<usize>) -> Self {
        LevelTuples {
            k,
            alphabet,
            level: 1,
            cur: vec![0; k],
            started: false,
        }
    }
}

impl Iterator for LevelTuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.k == 0 {
            return None;
        }
        loop {
            if self.alphabet.is_some_and(|n| self.level >= n) {
                return None;
            }
            if self.started {
                // odometer over [0..=level]^k, last position fastest
                let mut i = self.k;
                loop {
                    if i == 0 {
                        self.level += 1;
                        self.cur = vec![0; self.k];
                        self.started = false;
                        break;
                    }
                    i -= 1;
                    if self.cur[i] < self.level {
                        self.cur[i] += 1;
                        for c in &mut self.cur[i + 1..] {
                            *c = 0;
                        }
                        break;
                    }
                }
                if !self.started {
                    continue;
                }
            } else {
                self.started = true;
            }
            if self.cur.contains(&self.level) {
                return Some(self.cur.clone());
            }
        }
    }
}

/// `b = sum lambda_i * gens_i` with `deg minpoly(b) = dim A`, searched in a
/// deterministic order; when the generators give only finitely many
/// combinations, basis vectors are tried next. At most `budget` candidates.
pub fn primitive_element(a: &FiniteAlgebra, gens: &[AlgebraElement], budget: usize) -> Result<(AlgebraElement, UniPoly)> {
    let field = a.field();
    let basis = a.basis();
    let mut attempts = 0;
    let alphabet = field.modulus().map(|p| usize::try_from(p).unwrap_or(usize::MAX));
    for pool in [gens, &basis[..]] {
        for tuple in LevelTuples::new(pool.len(), alphabet) {
            if attempts >= budget {
                return Err(Error::SearchExhausted(attempts));
            }
            attempts += 1;
            let scalars = field.enumerate_scalars(tuple.iter().max().map_or(0, |m| m + 1));
            let b = pool
                .iter()
                .zip(&tuple)
                .filter(|(_, &t)| t != 0)
                .fold(a.zero(), |acc, (g, &t)| a.add(&acc, &a.scale(g, &scalars[t])));
            let g = a.minimal_polynomial(&b)?;
            if g.degree() == Some(a.dimension()) {
                return Ok((b, g));
            }
        }
        if alphabet.is_none() && !pool.is_empty() {
            break;
        }
    }
    Err(Error::SearchExhausted(attempts))
}

/// A nontrivial idempotent from the fixed space of `x -> x^p`, or `None`
/// when that space is the base field (then `A` is a field).
pub fn frobenius_split(a: &FiniteAlgebra) -> Result<Option<AlgebraElement>> {
    let field = a.field();
    let p = match field.modulus() {
        Some(p) => p,
        None => return Err(Error::CharacteristicZero),
    };
    if a.discriminant().is_zero() {
        return Err(Error::NotEtale);
    }
    let m = a.dimension();
    let cols = (0..m)
        .map(|j| {
            let mut v = a.pow(&a.basis_element(j), p)?.into_coords();
            v[j] = &v[j] - &field.one();
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel = Matrix::from_columns(field, m, &cols).nullspace();
    if kernel.len() <= 1 {
        return Ok(None);
    }
    let one = a.one();
    let b = kernel
        .into_iter()
        .map(AlgebraElement::new)
        .find(|v| Matrix::from_columns(field, m, &[one.coords().to_vec(), v.coords().to_vec()]).rank() == 2)
        .expect("a kernel of dimension >= 2 leaves the line through 1");
    for c in field.enumerate_scalars(usize::try_from(p).unwrap_or(usize::MAX)) {
        let x = a.add(&b, &a.scalar(&c));
        if a.minimal_polynomial(&x)?.coeff(0).is_zero() {
            return Ok(Some(a.idempotent_of(&x)?));
        }
    }
    contradiction("fixed-space element takes no base-field value")
}

struct Decomposer<'a> {
    root: &'a FiniteAlgebra,
    budget: usize,
    factors: Vec<Factor>,
    notes: Vec<String>,
}

impl Decomposer<'_> {
    fn to_root(&self, embed: &Matrix, v: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(embed.mul_vec(v.coords()))
    }

    fn emit(&mut self, comp: &FiniteAlgebra, embed: &Matrix, chain: &[AlgebraElement], b: &AlgebraElement, g: UniPoly) {
        self.factors.push(Factor {
            polynomial: g,
            generator: self.to_root(embed, b),
            idempotent: self.to_root(embed, &comp.one()),
            chain: chain.to_vec(),
        });
    }

    fn split(&mut self, comp: &FiniteAlgebra, embed: &Matrix, chain: &[AlgebraElement], e: &AlgebraElement, berlekamp: bool) -> Result<()> {
        let s = comp.split_by_idempotent(e)?;
        let mut c = chain.to_vec();
        c.push(self.to_root(embed, e));
        self.run(&s.complement, &embed.mul(&s.complement_embedding), &c, berlekamp)?;
        self.run(&s.component, &embed.mul(&s.component_embedding), &c, berlekamp)
    }

    fn non_etale(&self, comp: &FiniteAlgebra, embed: &Matrix, h: &UniPoly, a: &AlgebraElement) -> Result<()> {
        let w = self.to_root(embed, &h.eval_in_algebra(a, comp)?);
        Err(Error::NonEtaleWitness { witness: w.to_strings() })
    }

    fn run(&mut self, comp: &FiniteAlgebra, embed: &Matrix, chain: &[AlgebraElement], berlekamp: bool) -> Result<()> {
        let d = comp.dimension();
        let gens: Vec<AlgebraElement> = comp.generators().into_iter().map(|(_, g)| g).collect();
        if d == 1 {
            let b = gens.first().cloned().unwrap_or_else(|| comp.one());
            let g = comp.minimal_polynomial(&b)?;
            self.emit(comp, embed, chain, &b, g);
            return Ok(());
        }
        if berlekamp {
            // after the primitive search failed, split all the way down to fields
            if let Some(e) = frobenius_split(comp)? {
                return self.split(comp, embed, chain, &e, true);
            }
            let (b, g) = primitive_element(comp, &gens, self.budget)?;
            self.emit(comp, embed, chain, &b, g);
            return Ok(());
        }
        for a in gens.iter().chain(comp.basis().iter()) {
            let g = comp.minimal_polynomial(a)?;
            if g.derivative().is_zero() {
                let g1 = g.pth_power_decompose()?;
                return self.non_etale(comp, embed, &g1, a);
            }
            if !g.is_separable()? {
                let (g1, _) = match g.coprime_split() {
                    Ok(split) => split,
                    Err(Error::NoSimpleFactor) => return self.non_etale(comp, embed, &g.squarefree_part()?, a),
                    Err(e) => return Err(e),
                };
                let e = comp.idempotent_of(&g1.eval_in_algebra(a, comp)?)?;
                return self.split(comp, embed, chain, &e, false);
            }
            if g.degree() == Some(d) {
                self.emit(comp, embed, chain, a, g);
                return Ok(());
            }
        }
        match primitive_element(comp, &gens, self.budget) {
            Ok((b, g)) => {
                self.emit(comp, embed, chain, &b, g);
                Ok(())
            }
            Err(Error::SearchExhausted(n)) if comp.field().is_finite() => {
                self.notes.push(format!(
                    "SearchExhausted: no primitive element among {n} candidates in dimension {d}; splitting by the Frobenius fixed space"
                ));
                match frobenius_split(comp)? {
                    Some(e) => self.split(comp, embed, chain, &e, true),
                    None => contradiction("a finite field without a primitive element"),
                }
            }
            Err(e) => Err(e),
        }
    }
}

/// Product decomposition of an étale algebra into `K[T]/<g_i>` with `g_i`
/// monic separable.
pub fn decompose_etale(a: &FiniteAlgebra, primitive_budget: usize) -> Result<DecompositionCertificate> {
    if a.discriminant().is_zero() {
        return Err(Error::NotEtale);
    }
    let mut d = Decomposer {
        root: a,
        budget: primitive_budget,
        factors: Vec::new(),
        notes: Vec::new(),
    };
    let id = Matrix::identity(a.field(), a.dimension());
    d.run(a, &id, &[], false)?;
    let cert = DecompositionCertificate {
        factors: d.factors,
        notes: d.notes,
    };
    cert.verify(d.root)?;
    Ok(cert)
}

/// A nonzero nilpotent of `a`, found from a declared generator (or basis
/// vector) whose minimal polynomial is not separable.
pub fn nilpotent_witness(a: &FiniteAlgebra) -> Result<Option<AlgebraElement>> {
    let gens: Vec<AlgebraElement> = a.generators().into_iter().map(|(_, g)| g).collect();
    for x in gens.iter().chain(a.basis().iter()) {
        let g = a.minimal_polynomial(x)?;
        let h = if g.derivative().is_zero() {
            g.pth_power_decompose()?
        } else if !g.is_separable()? {
            g.squarefree_part()?
        } else {
            continue;
        };
        let w = h.eval_in_algebra(x, a)?;
        if w.is_zero() || !a.pow(&w, a.dimension() as u64)?.is_zero() {
            return contradiction("nilpotent witness failed its check");
        }
        return Ok(Some(w));
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub field: String,
    pub variables: Vec<String>,
    pub relations: Vec<String>,
}

/// An algebra element by coordinates and as a combination of basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementReport {
    pub coordinates: Vec<String>,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveElementReport {
    pub coordinates: Vec<String>,
    pub element: String,
    pub minimal_polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialsReport {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    /// `dim_K Omega_{A/K}` when the quotient is zero-dimensional.
    pub omega_dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub polynomial: String,
    pub generator: ElementReport,
    pub idempotent: ElementReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub nette: String,
    pub standard_smooth: String,
    pub elementary_smooth: String,
    pub standard_etale: String,
    pub decomposition: Option<Vec<FactorReport>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub input: InputEcho,
    pub trivial: bool,
    pub nette: bool,
    pub standard_smooth: bool,
    pub elementary_smooth: bool,
    pub standard_etale: bool,
    /// `-1` for the zero ring.
    pub noether_dimension: i64,
    pub vector_space_dimension: Option<usize>,
    /// Standard-monomial basis that coordinates refer to.
    pub basis: Option<Vec<String>>,
    pub discriminant: Option<String>,
    pub etale: bool,
    pub decomposition: Option<Vec<String>>,
    pub primitive_element: Option<PrimitiveElementReport>,
    pub nilpotent_witness: Option<ElementReport>,
    pub differentials: DifferentialsReport,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Certificates>,
}

fn element_report(a: &FiniteAlgebra, x: &AlgebraElement) -> ElementReport {
    ElementReport {
        coordinates: x.to_strings(),
        element: a.display_element(x),
    }
}

fn echo(p: &AlgebraPresentation) -> InputEcho {
    InputEcho {
        field: p.field().to_string(),
        variables: p.variables().to_vec(),
        relations: p.relations().iter().map(ToString::to_string).collect(),
    }
}

fn certificate_text(d: &Decision, p: &AlgebraPresentation, options: GroebnerOptions) -> Result<String> {
    let c = d.certificate(p, options)?;
    if !c.verify() {
        return contradiction("certificate failed its own check");
    }
    Ok(c.to_string())
}

pub fn classify(p: &AlgebraPresentation, options: ClassifyOptions) -> Result<ClassificationReport> {
    let tests = SmoothnessTests::new(p, options.groebner)?;
    let trivial = tests.is_trivial();
    let nette = tests.nette()?;
    let standard_smooth = tests.standard_smooth()?;
    let elementary_smooth = tests.elementary_smooth()?;
    let standard_etale = tests.standard_etale()?;
    let omega = omega_presentation(p);
    let mut report = ClassificationReport {
        input: echo(p),
        trivial,
        nette: nette.holds,
        standard_smooth: standard_smooth.holds,
        elementary_smooth: elementary_smooth.holds,
        standard_etale: standard_etale.holds,
        noether_dimension: -1,
        vector_space_dimension: None,
        basis: None,
        discriminant: None,
        etale: false,
        decomposition: None,
        primitive_element: None,
        nilpotent_witness: None,
        differentials: DifferentialsReport {
            generators: omega.generators(),
            relations: (0..p.nrelations()).map(|j| omega.display_relation(j)).collect(),
            omega_dimension: None,
        },
        notes: Vec::new(),
        certificates: None,
    };
    if options.certificates {
        report.certificates = Some(Certificates {
            nette: certificate_text(&nette, p, options.groebner)?,
            standard_smooth: certificate_text(&standard_smooth, p, options.groebner)?,
            elementary_smooth: certificate_text(&elementary_smooth, p, options.groebner)?,
            standard_etale: certificate_text(&standard_etale, p, options.groebner)?,
            decomposition: None,
        });
    }
    if trivial {
        report.vector_space_dimension = Some(0);
        report.basis = Some(Vec::new());
        report.discriminant = Some(p.field().one().to_string());
        report.etale = true;
        report.decomposition = Some(Vec::new());
        report.differentials.omega_dimension = Some(0);
        report.notes.push(
            "TrivialAlgebra: 1 lies in the ideal, the quotient is the zero ring and every test holds vacuously".into(),
        );
        return Ok(report);
    }
    let dim = tests.basis().noether_dimension()?;
    report.noether_dimension = dim as i64;
    if nette.holds && dim != 0 {
        return contradiction(format!("nette presentation with Noether dimension {dim}"));
    }
    if dim != 0 {
        report.notes.push(format!(
            "Noether dimension {dim}: the quotient is not strictly finite, so no discriminant or decomposition"
        ));
        return Ok(report);
    }
    let a = tests.quotient_algebra()?;
    report.vector_space_dimension = Some(a.dimension());
    report.basis = Some(a.labels().to_vec());
    report.differentials.omega_dimension = Some(tests.omega_dimension()?);
    let disc = a.discriminant();
    report.discriminant = Some(disc.to_string());
    report.etale = !disc.is_zero();
    if report.etale != nette.holds {
        return contradiction(format!(
            "zero-dimensional instance with nette = {} but discriminant {disc}",
            nette.holds
        ));
    }
    if report.differentials.omega_dimension == Some(0) && !nette.holds
        || report.differentials.omega_dimension != Some(0) && nette.holds
    {
        return contradiction("nette verdict disagrees with the dimension of the differentials");
    }
    if report.etale {
        let cert = decompose_etale(a, options.primitive_budget)?;
        report.decomposition = Some(cert.factors.iter().map(|f| f.polynomial.display_in("T")).collect());
        report.notes.extend(cert.notes.iter().cloned());
        if let [f] = &cert.factors[..] {
            report.primitive_element = Some(PrimitiveElementReport {
                coordinates: f.generator.to_strings(),
                element: a.display_element(&f.generator),
                minimal_polynomial: f.polynomial.display_in("T"),
            });
        } else {
            report.notes.push(format!(
                "no primitive element: the algebra splits into {} factors and none was found",
                cert.factors.len()
            ));
        }
        if let Some(c) = report.certificates.as_mut() {
            c.decomposition = Some(
                cert.factors
                    .iter()
                    .map(|f| FactorReport {
                        polynomial: f.polynomial.display_in("T"),
                        generator: element_report(a, &f.generator),
                        idempotent: element_report(a, &f.idempotent),
                    })
                    .collect(),
            );
        }
    } else {
        match nilpotent_witness(a)? {
            Some(w) => report.nilpotent_witness = Some(element_report(a, &w)),
            None => return contradiction("zero discriminant but every generator is separable"),
        }
    }
    Ok(report)
}

/// Parts of the report printed by the individual subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section {
    All,
    Nette,
    Smooth,
    Etale,
    Differentials,
    Decompose,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), ToString::to_string)
}

/// Plain-text rendering; byte-identical for identical reports.
pub fn render_text(r: &ClassificationReport, section: Section) -> String {
    let mut out = String::new();
    let all = section == Section::All;
    let certs = r.certificates.as_ref();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    if all {
        line(format!(
            "input: {}[{}]/<{}>",
            r.input.field,
            r.input.variables.join(", "),
            r.input.relations.join(", ")
        ));
        line(format!("trivial: {}", r.trivial));
    }
    if all || section == Section::Nette {
        line(format!("nette: {}", r.nette));
        if let Some(c) = certs {
            line(format!("  certificate: {}", c.nette));
        }
    }
    if all || section == Section::Smooth {
        line(format!("standard-smooth: {}", r.standard_smooth));
        if let Some(c) = certs {
            line(format!("  certificate: {}", c.standard_smooth));
        }
        line(format!("elementary-smooth: {}", r.elementary_smooth));
        if let Some(c) = certs {
            line(format!("  certificate: {}", c.elementary_smooth));
        }
    }
    if all || section == Section::Etale {
        line(format!("standard-etale: {}", r.standard_etale));
        if let Some(c) = certs {
            line(format!("  certificate: {}", c.standard_etale));
        }
        line(format!("noether-dimension: {}", r.noether_dimension));
        line(format!("vector-space-dimension: {}", opt(&r.vector_space_dimension)));
        if let Some(b) = &r.basis {
            line(format!("basis: {}", b.join(", ")));
        }
        line(format!("discriminant: {}", opt(&r.discriminant)));
        line(format!("etale: {}", r.etale));
        if let Some(w) = &r.nilpotent_witness {
            line(format!("nilpotent-witness: {}", w.element));
        }
    }
    if all || section == Section::Decompose {
        match &r.decomposition {
            Some(d) => line(format!("decomposition: {}", if d.is_empty() { "(empty product)".into() } else { d.join(" | ") })),
            None => line("decomposition: n/a".into()),
        }
        if let Some(pe) = &r.primitive_element {
            line(format!("primitive-element: {} with minimal polynomial {}", pe.element, pe.minimal_polynomial));
        }
        if let Some(fs) = certs.and_then(|c| c.decomposition.as_ref()) {
            for (i, f) in fs.iter().enumerate() {
                line(format!(
                    "  factor {}: {} at generator {} with idempotent {}",
                    i + 1,
                    f.polynomial,
                    f.generator.element,
                    f.idempotent.element
                ));
            }
        }
    }
    if all || section == Section::Differentials {
        line(format!("differentials: generators {}", r.differentials.generators.join(", ")));
        for rel in &r.differentials.relations {
            line(format!("  relation: {rel} = 0"));
        }
        line(format!("omega-dimension: {}", opt(&r.differentials.omega_dimension)));
    }
    if !r.notes.is_empty() {
        line("notes:".into());
        for n in &r.notes {
            line(format!("  - {n}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_input;

    fn run(text: &str) -> ClassificationReport {
        classify(&parse_input(text).unwrap(), ClassifyOptions::default()).unwrap()
    }

    fn algebra(text: &str) -> FiniteAlgebra {
        parse_input(text)
            .unwrap()
            .groebner(GroebnerOptions::default())
            .unwrap()
            .quotient_algebra()
            .unwrap()
    }

    #[test]
    fn level_tuples_order() {
        let t: Vec<Vec<usize>> = LevelTuples::new(2, None).take(8).collect();
        assert_eq!(
            t,
            vec![
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![0, 2],
                vec![1, 2],
                vec![2, 0],
                vec![2, 1],
                vec![2, 2]
            ]
        );
        assert_eq!(LevelTuples::new(3, Some(2)).count(), 7);
        assert_eq!(LevelTuples::new(0, None).count(), 0);
    }

    #[test]
    fn classify_examples() {
        let r = run("field Q\nvars X, Y\nrelations:\n X^2 + Y^2 - 1\n X*Y\n");
        assert!(r.nette && r.etale && r.standard_etale);
        assert_eq!(r.noether_dimension, 0);
        assert_eq!(r.vector_space_dimension, Some(4));

        let r = run("field Q\nvars X, Y\nrelations:\n X*Y - 1\n");
        assert!(!r.nette && r.standard_smooth);
        assert_eq!(r.noether_dimension, 1);
        assert_eq!(r.vector_space_dimension, None);

        let r = run("field Q\nvars X\nrelations:\n X^2\n");
        assert!(!r.nette && !r.etale);
        assert_eq!(r.noether_dimension, 0);
        assert_eq!(r.discriminant.as_deref(), Some("0"));
        assert_eq!(r.nilpotent_witness.unwrap().element, "X");
    }

    #[test]
    fn trivial_ring_report() {
        let r = run("field Q\nvars X\nrelations:\n X\n X - 1\n");
        assert!(r.trivial && r.nette && r.etale);
        assert_eq!(r.noether_dimension, -1);
        assert_eq!(r.vector_space_dimension, Some(0));
        assert!(r.notes[0].starts_with("TrivialAlgebra"));
    }

    #[test]
    fn decompose_examples() {
        let a = algebra("field Q\nvars X\nrelations:\n X^2 - 1\n");
        let c = decompose_etale(&a, 1000).unwrap();
        assert_eq!(c.degrees().iter().sum::<usize>(), 2);
        c.verify(&a).unwrap();

        let a = algebra("field Q\nvars X, Y\nrelations:\n X^2 - 2\n Y^2 - 3\n");
        let c = decompose_etale(&a, 1000).unwrap();
        assert_eq!(c.factors.len(), 1);
        assert_eq!(c.factors[0].polynomial.display_in("T"), "T^4 - 10*T^2 + 1");

        let a = algebra("field GF(2)\nvars X\nrelations:\n X^2 + X + 1\n");
        let c = decompose_etale(&a, 1000).unwrap();
        assert_eq!(c.factors.len(), 1);
        assert_eq!(c.factors[0].polynomial.display_in("T"), "T^2 + T + 1");

        let a = algebra("field Q\nvars X\nrelations:\n X^2\n");
        assert!(matches!(decompose_etale(&a, 1000), Err(Error::NotEtale)));
    }

    #[test]
    fn primitive_element_examples() {
        let a = algebra("field Q\nvars X, Y\nrelations:\n X^2 - 2\n Y^2 - 3\n");
        let gens: Vec<AlgebraElement> = a.generators().into_iter().map(|(_, g)| g).collect();
        let (b, g) = primitive_element(&a, &gens, 1000).unwrap();
        assert_eq!(b, a.add(&gens[0], &gens[1]));
        assert_eq!(g.display_in("T"), "T^4 - 10*T^2 + 1");
        assert!(g.eval_in_algebra(&b, &a).unwrap().is_zero());

        let a = algebra("field Q\nvars X\nrelations:\n X^2 - 2\n");
        let x = a.generator("X").unwrap();
        assert_eq!(primitive_element(&a, std::slice::from_ref(&x), 1000).unwrap().0, x);

        let a = algebra("field GF(2)\nvars X\nrelations:\n X^2 + X\n");
        let x = a.generator("X").unwrap();
        let (b, g) = primitive_element(&a, std::slice::from_ref(&x), 1000).unwrap();
        assert_eq!(b, x);
        assert_eq!(g.display_in("T"), "T^2 + T");

        // (GF(2))^4 has 16 elements and none generates it
        let a = algebra("field GF(2)\nvars X, Y\nrelations:\n X^2 + X\n Y^2 + Y\n");
        let gens: Vec<AlgebraElement> = a.generators().into_iter().map(|(_, g)| g).collect();
        assert!(matches!(primitive_element(&a, &gens, 1000), Err(Error::SearchExhausted(_))));
        let c = decompose_etale(&a, 1000).unwrap();
        assert_eq!(c.degrees(), vec![1, 1, 1, 1]);
        assert!(c.notes[0].starts_with("SearchExhausted"));
    }

    #[test]
    fn frobenius_examples() {
        let a = algebra("field GF(2)\nvars X\nrelations:\n X^2 + X\n");
        assert_eq!(frobenius_split(&a).unwrap(), a.generator("X"));
        let a = algebra("field GF(2)\nvars X\nrelations:\n X^2 + X + 1\n");
        assert_eq!(frobenius_split(&a).unwrap(), None);
        let a = algebra("field GF(3)\nvars X\nrelations:\n X^2 - 1\n");
        let k = a.field();
        assert_eq!(
            frobenius_split(&a).unwrap(),
            Some(AlgebraElement::new(vec![k.from_i64(2), k.from_i64(2)]))
        );
        let a = algebra("field GF(3)\nvars X\nrelations:\n X^2\n");
        assert_eq!(frobenius_split(&a), Err(Error::NotEtale));
    }

    #[test]
    fn rendering_is_stable() {
        let r = run("field Q\nvars X\nrelations:\n X^2 - 1\n");
        let t = render_text(&r, Section::All);
        assert!(t.contains("nette: true\n"));
        assert!(t.contains("omega-dimension: 0\n"));
        assert_eq!(t, render_text(&run("field Q\nvars X\nrelations:\n X^2 - 1\n"), Section::All));
        assert_eq!(render_text(&r, Section::Nette), "nette: true\n");
    }
}
