//! Quantum Hamiltonian reduction pipeline.
//!
//! Given a Lie-algebra action on a Clifford or Grassmann algebra through a
//! comoment map (a list of generator elements), this module computes the left
//! ideal the generators create, the invariant subalgebra, their intersection,
//! the quotient superalgebra on canonical coset representatives, the cyclic
//! module with its generator action matrices, endomorphism superalgebras, and
//! the operational Morita-equivalence checks. A classical variant runs the
//! same pipeline in the Grassmann algebra with the symbol-map Poisson bracket.

use num_traits::{One, Zero};

use crate::linalg::{
    complement_reps, express, intersect, kernel_of_rows, rref_span, RationalMatrix, Subspace,
};
use crate::superblade::{Blade, Element, Parity, Signature};
use crate::{rat, Error, Rat};

/// A named Lie-algebra action: the comoment images of a basis of the Lie
/// algebra, with an optional expected bracket table and identification hints.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub name: String,
    pub signature: Signature,
    pub generators: Vec<Element>,
    /// Entries (i, j, expected) assert [g_i, g_j] = expected.
    pub expected_brackets: Vec<(usize, usize, Element)>,
    /// Named candidate images for identifying the quotient.
    pub hints: Vec<(String, Element)>,
    /// The Lagrangian example carries an odd generator; everything else is
    /// quadratic and even.
    pub allows_odd: bool,
}

impl ActionSpec {
    pub fn new(
        name: impl Into<String>,
        signature: Signature,
        generators: Vec<Element>,
    ) -> Result<Self, Error> {
        let spec = ActionSpec {
            name: name.into(),
            signature,
            generators,
            expected_brackets: Vec::new(),
            hints: Vec::new(),
            allows_odd: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_odd_generators(mut self) -> Self {
        self.allows_odd = true;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        for g in &self.generators {
            if g.context() != &self.signature {
                return Err(Error::ContextMismatch {
                    left: self.signature.to_string(),
                    right: g.context().to_string(),
                });
            }
            match g.parity() {
                None => return Err(Error::InhomogeneousGenerator(g.to_string())),
                Some(Parity::Odd) if !self.allows_odd => {
                    return Err(Error::OddGenerator(g.to_string()))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.signature.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.signature.dim()
    }
}

/// A finite-dimensional superalgebra by structure constants:
/// b_i b_j = sum_k sc[i][j][k] b_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    parities: Vec<Parity>,
    unit: Vec<Rat>,
    sc: Vec<Vec<Vec<Rat>>>,
}

impl QuotientAlgebra {
    pub fn new(parities: Vec<Parity>, unit: Vec<Rat>, sc: Vec<Vec<Vec<Rat>>>) -> Result<Self, Error> {
        let dim = parities.len();
        if unit.len() != dim || sc.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "inconsistent dimensions: {} parities, {} unit coords, {} constant rows",
                dim,
                unit.len(),
                sc.len()
            )));
        }
        for row in &sc {
            if row.len() != dim || row.iter().any(|col| col.len() != dim) {
                return Err(Error::InvalidAlgebra(
                    "structure constants are not a dim^3 array".into(),
                ));
            }
        }
        let alg = QuotientAlgebra { parities, unit, sc };
        alg.validate()?;
        Ok(alg)
    }

    pub fn zero_dimensional() -> Self {
        QuotientAlgebra {
            parities: Vec::new(),
            unit: Vec::new(),
            sc: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let dim = self.dim();
        if dim == 0 {
            return Ok(());
        }
        // parity additivity
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if !self.sc[i][j][k].is_zero()
                        && self.parities[k] != self.parities[i].add(self.parities[j])
                    {
                        return Err(Error::InvalidAlgebra(format!(
                            "parity violated at constants [{i}][{j}][{k}]"
                        )));
                    }
                }
            }
        }
        // unit laws
        for i in 0..dim {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::one();
            if self.mul_coords(&self.unit, &e) != e || self.mul_coords(&e, &self.unit) != e {
                return Err(Error::InvalidAlgebra(format!("unit law fails on basis {i}")));
            }
        }
        // associativity on basis triples; all of them up to dim 16, a
        // deterministic stride sample beyond that (only trivial-group
        // reductions of big algebras get there)
        let idxs: Vec<usize> = if dim <= 16 {
            (0..dim).collect()
        } else {
            (0..dim).step_by(dim / 16 + 1).collect()
        };
        for &i in &idxs {
            for &j in &idxs {
                for &k in &idxs {
                    let mut bi = vec![Rat::zero(); dim];
                    bi[i] = Rat::one();
                    let mut bj = vec![Rat::zero(); dim];
                    bj[j] = Rat::one();
                    let mut bk = vec![Rat::zero(); dim];
                    bk[k] = Rat::one();
                    let left = self.mul_coords(&self.mul_coords(&bi, &bj), &bk);
                    let right = self.mul_coords(&bi, &self.mul_coords(&bj, &bk));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn constants(&self) -> &[Vec<Vec<Rat>>] {
        &self.sc
    }

    /// (even, odd) basis counts.
    pub fn parity_split(&self) -> (usize, usize) {
        let even = self.parities.iter().filter(|p| **p == Parity::Even).count();
        (even, self.parities.len() - even)
    }

    pub fn mul_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let dim = self.dim();
        let mut out = vec![Rat::zero(); dim];
        for i in 0..dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..dim {
                    if !self.sc[i][j][k].is_zero() {
                        out[k] += &ab * &self.sc[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Parity of a coordinate vector if it is homogeneous (zero counts even).
    pub fn coords_parity(&self, v: &[Rat]) -> Option<Parity> {
        let mut parity = None;
        for (c, p) in v.iter().zip(&self.parities) {
            if c.is_zero() {
                continue;
            }
            match parity {
                None => parity = Some(*p),
                Some(q) if q != *p => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }
}

/// Outcome of a reduction: the three subspaces, the quotient algebra on the
/// chosen representatives, and the parity count of the cyclic module.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub ideal: Subspace,
    pub invariants: Subspace,
    pub intersection: Subspace,
    pub quotient: QuotientAlgebra,
    /// Coordinates in the ambient algebra of the quotient basis classes.
    pub reps: Vec<Vec<Rat>>,
    /// (even, odd) dimension of A / <ideal>.
    pub module_dim: (usize, usize),
    /// Named elements found inside the intersection, for reporting.
    pub witness_elements: Vec<(String, Element)>,
}

impl ReductionResult {
    /// Coordinates of an ambient element's class in the quotient basis, if
    /// the element lies in the invariant subalgebra.
    pub fn quotient_coords(&self, f: &Element) -> Option<Vec<Rat>> {
        let mut rows = self.reps.clone();
        rows.extend(self.intersection.basis_rows().iter().cloned());
        let coeffs = express(&rows, &f.coords())?;
        Some(coeffs[..self.reps.len()].to_vec())
    }
}

/// The left ideal generated by the comoment image: span of blade * generator
/// over all 2^n blades. One pass suffices because the algebra is unital.
pub fn left_ideal(spec: &ActionSpec) -> Result<Subspace, Error> {
    spec.validate()?;
    let dim = spec.algebra_dim();
    let mut ideal = Subspace::empty(dim);
    for g in &spec.generators {
        for mask in 0..dim as u64 {
            let blade = Element::from_blade(spec.signature.clone(), Blade(mask), rat(1));
            let product = blade.checked_mul(g)?;
            ideal.insert(product.coords())?;
        }
    }
    Ok(ideal)
}

fn invariant_subspace_with<F>(spec: &ActionSpec, bracket: F) -> Result<Subspace, Error>
where
    F: Fn(&Element, &Element) -> Result<Element, Error>,
{
    for g in &spec.generators {
        if g.parity() != Some(Parity::Even) && !g.is_zero() {
            return Err(Error::OddGenerator(g.to_string()));
        }
    }
    let dim = spec.algebra_dim();
    let mut equations: Vec<Vec<Rat>> = Vec::new();
    for g in &spec.generators {
        // column j of ad_g is the bracket with blade j
        let mut rows = vec![vec![Rat::zero(); dim]; dim];
        let mut nonzero = vec![false; dim];
        for j in 0..dim as u64 {
            let blade = Element::from_blade(spec.signature.clone(), Blade(j), rat(1));
            let image = bracket(g, &blade)?;
            for (b, c) in image.terms() {
                rows[b.0 as usize][j as usize] = c.clone();
                nonzero[b.0 as usize] = true;
            }
        }
        for (row, nz) in rows.into_iter().zip(nonzero) {
            if nz {
                equations.push(row);
            }
        }
    }
    let inv = kernel_of_rows(equations, dim);
    // closure under multiplication, skipped when the subspace is trivially
    // the whole algebra
    if inv.dim() < dim && inv.dim() <= 32 {
        for a in inv.basis_rows() {
            for b in inv.basis_rows() {
                let fa = Element::from_coords(spec.signature.clone(), a)?;
                let fb = Element::from_coords(spec.signature.clone(), b)?;
                if !inv.contains(&fa.checked_mul(&fb)?.coords())? {
                    return Err(Error::InvalidAlgebra(
                        "invariant subspace is not closed under multiplication".into(),
                    ));
                }
            }
        }
    }
    Ok(inv)
}

/// The invariant subalgebra: the joint kernel of the adjoint maps of the
/// generators (ordinary commutators, since the generators are even).
pub fn invariant_subalgebra(spec: &ActionSpec) -> Result<Subspace, Error> {
    spec.validate()?;
    invariant_subspace_with(spec, |g, f| g.checked_supercommutator(f))
}

/// Symbol-map Poisson bracket on the Grassmann algebra: lift both arguments
/// blade-for-blade into the all-(-1) Clifford algebra, take the
/// supercommutator there, and read the result back.
pub fn poisson_bracket(f: &Element, g: &Element) -> Result<Element, Error> {
    for &e in f.context().entries() {
        if e != 0 {
            return Err(Error::NonzeroSignature(e));
        }
    }
    let n = f.context().len();
    let lift = Signature::cliff(n);
    let bracket = f
        .with_context(lift.clone())?
        .checked_supercommutator(&g.with_context(lift)?)?;
    bracket.with_context(f.context().clone())
}

/// Quotient algebra on the given representatives modulo the intersection.
/// Exposed separately so the representative-perturbation property test can
/// rebuild constants from shifted representatives.
pub fn build_quotient(
    sig: &Signature,
    reps: &[Vec<Rat>],
    intersection: &Subspace,
) -> Result<QuotientAlgebra, Error> {
    if reps.is_empty() {
        return Ok(QuotientAlgebra::zero_dimensional());
    }
    if reps.len() > 128 {
        return Err(Error::QuotientTooLarge(reps.len()));
    }
    let mut basis: Vec<Vec<Rat>> = reps.to_vec();
    basis.extend(intersection.basis_rows().iter().cloned());
    let m = reps.len();

    let mut parities = Vec::with_capacity(m);
    let rep_elements: Vec<Element> = reps
        .iter()
        .map(|r| Element::from_coords(sig.clone(), r))
        .collect::<Result<_, _>>()?;
    for e in &rep_elements {
        parities.push(e.parity().ok_or_else(|| {
            Error::InvalidAlgebra("quotient representative is not parity-homogeneous".into())
        })?);
    }

    let class_of = |f: &Element| -> Result<Vec<Rat>, Error> {
        let coeffs = express(&basis, &f.coords()).ok_or(Error::ClosureFailure)?;
        Ok(coeffs[..m].to_vec())
    };

    let unit = class_of(&Element::one(sig.clone()))?;
    let mut sc = vec![vec![vec![Rat::zero(); m]; m]; m];
    for (i, a) in rep_elements.iter().enumerate() {
        for (j, b) in rep_elements.iter().enumerate() {
            sc[i][j] = class_of(&a.checked_mul(b)?)?;
        }
    }
    QuotientAlgebra::new(parities, unit, sc)
}

fn module_parity_split(sig: &Signature, ideal: &Subspace) -> Result<(usize, usize), Error> {
    let reps = complement_reps(&Subspace::full(sig.dim()), ideal)?;
    let mut even = 0;
    let mut odd = 0;
    for r in &reps {
        let e = Element::from_coords(sig.clone(), r)?;
        match e.parity() {
            Some(Parity::Even) => even += 1,
            Some(Parity::Odd) => odd += 1,
            None => {
                return Err(Error::InvalidAlgebra(
                    "module representative is not parity-homogeneous".into(),
                ))
            }
        }
    }
    Ok((even, odd))
}

fn reduce_with_bracket<F>(spec: &ActionSpec, bracket: F) -> Result<ReductionResult, Error>
where
    F: Fn(&Element, &Element) -> Result<Element, Error>,
{
    spec.validate()?;
    let ideal = left_ideal(spec)?;
    let invariants = invariant_subspace_with(spec, bracket)?;
    let intersection = intersect(&invariants, &ideal)?;

    // the intersection must be a two-sided ideal of the invariant subalgebra
    for f in invariants.basis_rows() {
        for v in intersection.basis_rows() {
            let fe = Element::from_coords(spec.signature.clone(), f)?;
            let ve = Element::from_coords(spec.signature.clone(), v)?;
            for p in [fe.checked_mul(&ve)?, ve.checked_mul(&fe)?] {
                if !intersection.contains(&p.coords())? {
                    return Err(Error::TwoSidednessFailure(p.to_string()));
                }
            }
        }
    }

    let reps = complement_reps(&invariants, &intersection)?;
    let quotient = build_quotient(&spec.signature, &reps, &intersection)?;
    let module_dim = module_parity_split(&spec.signature, &ideal)?;
    Ok(ReductionResult {
        ideal,
        invariants,
        intersection,
        quotient,
        reps,
        module_dim,
        witness_elements: Vec::new(),
    })
}

/// Quantum Hamiltonian reduction: ideal, invariants, intersection, and the
/// quotient algebra A^G / (A^G intersect <mu* g>).
pub fn reduce(spec: &ActionSpec) -> Result<ReductionResult, Error> {
    reduce_with_bracket(spec, |g, f| g.checked_supercommutator(f))
}

/// Classical (Poisson) reduction in the Grassmann algebra, plus the induced
/// Poisson brackets of the quotient basis classes.
#[derive(Debug, Clone)]
pub struct ClassicalResult {
    pub reduction: ReductionResult,
    /// brackets[i][j] = quotient coordinates of {rep_i, rep_j}.
    pub brackets: Vec<Vec<Vec<Rat>>>,
}

pub fn classical_reduce(spec: &ActionSpec) -> Result<ClassicalResult, Error> {
    for &e in spec.signature.entries() {
        if e != 0 {
            return Err(Error::NonzeroSignature(e));
        }
    }
    let reduction = reduce_with_bracket(spec, poisson_bracket)?;
    let m = reduction.reps.len();
    let rep_elements: Vec<Element> = reduction
        .reps
        .iter()
        .map(|r| Element::from_coords(spec.signature.clone(), r))
        .collect::<Result<_, _>>()?;
    let mut brackets = vec![vec![vec![Rat::zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            let pb = poisson_bracket(&rep_elements[i], &rep_elements[j])?;
            brackets[i][j] = reduction
                .quotient_coords(&pb)
                .ok_or(Error::ClosureFailure)?;
        }
    }
    Ok(ClassicalResult { reduction, brackets })
}

/// One entry of a bracket-table verification.
#[derive(Debug, Clone)]
pub struct BracketCheck {
    pub i: usize,
    pub j: usize,
    pub expected: Element,
    pub actual: Element,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct BracketReport {
    pub checks: Vec<BracketCheck>,
    pub closure_dim: usize,
    pub all_pass: bool,
}

/// Dimension of the Lie algebra generated by the given elements under the
/// supercommutator.
pub fn lie_closure_dim(sig: &Signature, generators: &[Element]) -> Result<usize, Error> {
    let dim = sig.dim();
    let vectors: Vec<Vec<Rat>> = generators.iter().map(|g| g.coords()).collect();
    let mut span = rref_span(&vectors, dim)?;
    loop {
        let elements: Vec<Element> = span
            .basis_rows()
            .iter()
            .map(|r| Element::from_coords(sig.clone(), r))
            .collect::<Result<_, _>>()?;
        let mut grew = false;
        for (i, a) in elements.iter().enumerate() {
            for b in elements.iter().skip(i + 1) {
                if span.insert(a.checked_supercommutator(b)?.coords())? {
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(span.dim());
        }
    }
}

/// Check every listed supercommutator against its expected value and compute
/// the Lie closure dimension of the generator span.
pub fn verify_bracket_table(spec: &ActionSpec) -> Result<BracketReport, Error> {
    spec.validate()?;
    let mut checks = Vec::new();
    for (i, j, expected) in &spec.expected_brackets {
        let actual = spec.generators[*i].checked_supercommutator(&spec.generators[*j])?;
        let pass = actual == *expected;
        checks.push(BracketCheck {
            i: *i,
            j: *j,
            expected: expected.clone(),
            actual,
            pass,
        });
    }
    let closure_dim = lie_closure_dim(&spec.signature, &spec.generators)?;
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(BracketReport {
        checks,
        closure_dim,
        all_pass,
    })
}

/// The cyclic module A / <mu* g> with its canonical blade representatives and
/// the left-multiplication matrices of the algebra generators x_1..x_n.
#[derive(Debug, Clone)]
pub struct ModuleRep {
    pub signature: Signature,
    pub ideal: Subspace,
    pub rep_blades: Vec<Blade>,
    pub parities: Vec<Parity>,
    /// actions[i] is the matrix of left multiplication by x_{i+1}.
    pub actions: Vec<RationalMatrix>,
}

impl ModuleRep {
    pub fn dim(&self) -> usize {
        self.rep_blades.len()
    }

    pub fn parity_split(&self) -> (usize, usize) {
        let even = self.parities.iter().filter(|p| **p == Parity::Even).count();
        (even, self.parities.len() - even)
    }

    /// Reduce ambient coordinates modulo the ideal and read off the module
    /// coordinates at the representative blades.
    pub fn project(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut v = coords.to_vec();
        self.ideal.reduce_in_place(&mut v);
        self.rep_blades
            .iter()
            .map(|b| v[b.0 as usize].clone())
            .collect()
    }

    /// Matrix of left multiplication by an arbitrary algebra element.
    pub fn left_matrix(&self, f: &Element) -> Result<RationalMatrix, Error> {
        self.action_matrix(f, true)
    }

    /// Matrix of right multiplication. Well-defined on the quotient module
    /// only when `f` commutes with the ideal (e.g. an invariant element).
    pub fn right_matrix(&self, f: &Element) -> Result<RationalMatrix, Error> {
        self.action_matrix(f, false)
    }

    fn action_matrix(&self, f: &Element, left: bool) -> Result<RationalMatrix, Error> {
        let m = self.dim();
        let mut out = RationalMatrix::zero(m, m);
        for (j, blade) in self.rep_blades.iter().enumerate() {
            let rep = Element::from_blade(self.signature.clone(), *blade, rat(1));
            let product = if left {
                f.checked_mul(&rep)?
            } else {
                // right multiplication with the Koszul sign (-1)^{|m||f|},
                // so that odd right multiplications super-commute with the
                // left action
                let (fe, fo) = f.parity_decompose();
                let odd_part = rep.checked_mul(&fo)?;
                let odd_part = if blade.parity() == Parity::Odd {
                    odd_part.neg()
                } else {
                    odd_part
                };
                rep.checked_mul(&fe)?.add(&odd_part)
            };
            let col = self.project(&product.coords());
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    out.set(i, j, c);
                }
            }
        }
        Ok(out)
    }
}

/// Build the cyclic module for an action. Fails if the ideal is everything.
pub fn cyclic_module(spec: &ActionSpec) -> Result<ModuleRep, Error> {
    spec.validate()?;
    let ideal = left_ideal(spec)?;
    cyclic_module_of_ideal(&spec.signature, ideal)
}

pub fn cyclic_module_of_ideal(sig: &Signature, ideal: Subspace) -> Result<ModuleRep, Error> {
    let dim = sig.dim();
    if ideal.dim() == dim {
        return Err(Error::ZeroModule);
    }
    // reduction modulo the ideal RREF leaves residues supported exactly on
    // the non-pivot columns, so those blades are the module basis
    let rep_blades: Vec<Blade> = (0..dim as u64)
        .filter(|mask| !ideal.pivots().contains(&(*mask as usize)))
        .map(Blade)
        .collect();
    let parities = rep_blades.iter().map(|b| b.parity()).collect();
    let mut module = ModuleRep {
        signature: sig.clone(),
        ideal,
        rep_blades,
        parities,
        actions: Vec::new(),
    };
    for i in 1..=sig.len() {
        let xi = Element::generator(sig.clone(), i)?;
        let mat = module.left_matrix(&xi)?;
        module.actions.push(mat);
    }
    Ok(module)
}

/// Basis of parity-homogeneous linear maps f on a graded space satisfying
/// f . L = (-1)^{|f||L|} L . f for every listed action matrix, where even f
/// preserve and odd f swap the grading.
pub fn super_commutant(
    actions: &[(RationalMatrix, Parity)],
    parities: &[Parity],
) -> (Vec<RationalMatrix>, Vec<RationalMatrix>) {
    let even = solve_commutant(actions, parities, Parity::Even);
    let odd = solve_commutant(actions, parities, Parity::Odd);
    (even, odd)
}

fn solve_commutant(
    actions: &[(RationalMatrix, Parity)],
    parities: &[Parity],
    f_parity: Parity,
) -> Vec<RationalMatrix> {
    let m = parities.len();
    // unknowns: entries (r, c) compatible with the parity of f
    let mut unknown_index = vec![vec![usize::MAX; m]; m];
    let mut unknowns = Vec::new();
    for r in 0..m {
        for c in 0..m {
            let ok = match f_parity {
                Parity::Even => parities[r] == parities[c],
                Parity::Odd => parities[r] != parities[c],
            };
            if ok {
                unknown_index[r][c] = unknowns.len();
                unknowns.push((r, c));
            }
        }
    }
    let mut equations: Vec<Vec<Rat>> = Vec::new();
    for (l, l_parity) in actions {
        let sign = rat(i64::from(f_parity.sign_factor(*l_parity)));
        // (F L - sign L F)[p][q] = 0
        for p in 0..m {
            for q in 0..m {
                let mut row = vec![Rat::zero(); unknowns.len()];
                let mut nonzero = false;
                for c in 0..m {
                    let lcq = l.get(c, q);
                    if !lcq.is_zero() && unknown_index[p][c] != usize::MAX {
                        row[unknown_index[p][c]] += lcq;
                        nonzero = true;
                    }
                }
                for r in 0..m {
                    let lpr = l.get(p, r);
                    if !lpr.is_zero() && unknown_index[r][q] != usize::MAX {
                        row[unknown_index[r][q]] -= &sign * lpr;
                        nonzero = true;
                    }
                }
                if nonzero {
                    equations.push(row);
                }
            }
        }
    }
    let ker = kernel_of_rows(equations, unknowns.len());
    ker.basis_rows()
        .iter()
        .map(|v| {
            let mut mat = RationalMatrix::zero(m, m);
            for (idx, &(r, c)) in unknowns.iter().enumerate() {
                if !v[idx].is_zero() {
                    mat.set(r, c, v[idx].clone());
                }
            }
            mat
        })
        .collect()
}

/// The endomorphism superalgebra of the module over the given action
/// matrices, with composition order fg = g . f. The returned basis is the
/// canonical commutant basis, even part first.
pub fn endomorphism_algebra(
    actions: &[(RationalMatrix, Parity)],
    parities: &[Parity],
) -> Result<QuotientAlgebra, Error> {
    let m = parities.len();
    if m == 0 {
        return Ok(QuotientAlgebra::zero_dimensional());
    }
    let (even, odd) = super_commutant(actions, parities);
    let mut basis_mats: Vec<(RationalMatrix, Parity)> = Vec::new();
    basis_mats.extend(even.into_iter().map(|f| (f, Parity::Even)));
    basis_mats.extend(odd.into_iter().map(|f| (f, Parity::Odd)));
    let dim = basis_mats.len();
    if dim > 128 {
        return Err(Error::QuotientTooLarge(dim));
    }
    let rows: Vec<Vec<Rat>> = basis_mats.iter().map(|(f, _)| f.flatten()).collect();
    let express_mat = |mat: &RationalMatrix| -> Result<Vec<Rat>, Error> {
        express(&rows, &mat.flatten()).ok_or(Error::ClosureFailure)
    };
    let unit = express_mat(&RationalMatrix::identity(m))?;
    let mut sc = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            // fg = g after f: apply basis_mats[i] first
            let prod = basis_mats[j].0.mul(&basis_mats[i].0)?;
            sc[i][j] = express_mat(&prod)?;
        }
    }
    let parities = basis_mats.iter().map(|(_, p)| *p).collect();
    QuotientAlgebra::new(parities, unit, sc)
}

/// Result of the operational Morita verification.
#[derive(Debug, Clone)]
pub struct MoritaReport {
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub quotient_dim: usize,
    /// dim(M)^2 = dim(A) * dim(B)
    pub dim_identity: bool,
    pub end_a_dim: usize,
    /// End_A(M) has the quotient's dimension and parity split.
    pub end_a_matches: bool,
    /// The right quotient action injects onto End_A(M) as an algebra map.
    pub right_action_injects: bool,
    pub end_b_dim: usize,
    /// End over the right quotient action recovers dim(A).
    pub end_b_matches: bool,
    /// The left A-action on the module has zero annihilator.
    pub faithful: bool,
}

impl MoritaReport {
    pub fn pass(&self) -> bool {
        self.dim_identity
            && self.end_a_matches
            && self.right_action_injects
            && self.end_b_matches
            && self.faithful
    }
}

/// Double-centralizer Morita witness check for a completed reduction.
pub fn morita_check(
    spec: &ActionSpec,
    reduction: &ReductionResult,
    module: &ModuleRep,
) -> Result<MoritaReport, Error> {
    let dim_a = spec.algebra_dim();
    let dim_m = module.dim();
    let dim_b = reduction.quotient.dim();
    let dim_identity = dim_m * dim_m == dim_a * dim_b;

    // End_A(M): commutant of the generator left actions (all odd)
    let left_actions: Vec<(RationalMatrix, Parity)> = module
        .actions
        .iter()
        .map(|l| (l.clone(), Parity::Odd))
        .collect();
    let (end_even, end_odd) = super_commutant(&left_actions, &module.parities);
    let end_a_dim = end_even.len() + end_odd.len();
    let (q_even, q_odd) = reduction.quotient.parity_split();
    let end_a_matches = end_even.len() == q_even && end_odd.len() == q_odd;

    // the right action of each quotient basis class, as a module endomorphism
    let rep_elements: Vec<Element> = reduction
        .reps
        .iter()
        .map(|r| Element::from_coords(spec.signature.clone(), r))
        .collect::<Result<_, _>>()?;
    let right_mats: Vec<RationalMatrix> = rep_elements
        .iter()
        .map(|b| module.right_matrix(b))
        .collect::<Result<_, _>>()?;

    let mut right_action_injects = true;
    // each right action lies in the computed commutant
    let end_rows: Vec<Vec<Rat>> = end_even
        .iter()
        .chain(end_odd.iter())
        .map(|f| f.flatten())
        .collect();
    for r in &right_mats {
        if express(&end_rows, &r.flatten()).is_none() {
            right_action_injects = false;
        }
    }
    // injectivity
    let flat: Vec<Vec<Rat>> = right_mats.iter().map(|r| r.flatten()).collect();
    if rref_span(&flat, dim_m * dim_m)?.dim() != dim_b {
        right_action_injects = false;
    }
    // homomorphism (with fg = g . f and the Koszul-signed right action):
    // R(b_j) . R(b_i) = (-1)^{|b_i||b_j|} R(b_i b_j)
    for i in 0..dim_b {
        for j in 0..dim_b {
            let mut expected = RationalMatrix::zero(dim_m, dim_m);
            for (k, c) in reduction.quotient.constants()[i][j].iter().enumerate() {
                if !c.is_zero() {
                    expected = expected.add(&right_mats[k].scale(c))?;
                }
            }
            let parities = reduction.quotient.parities();
            if parities[i].sign_factor(parities[j]) < 0 {
                expected = expected.scale(&rat(-1));
            }
            let actual = right_mats[j].mul(&right_mats[i])?;
            if expected != actual {
                right_action_injects = false;
            }
        }
    }

    // End over the right quotient action
    let right_actions: Vec<(RationalMatrix, Parity)> = right_mats
        .iter()
        .zip(reduction.quotient.parities())
        .map(|(r, p)| (r.clone(), *p))
        .collect();
    let (b_even, b_odd) = super_commutant(&right_actions, &module.parities);
    let end_b_dim = b_even.len() + b_odd.len();
    let end_b_matches = end_b_dim == dim_a;

    // faithfulness of the left action
    let mut action_vectors = Vec::with_capacity(dim_a);
    for mask in 0..dim_a as u64 {
        let blade = Element::from_blade(spec.signature.clone(), Blade(mask), rat(1));
        action_vectors.push(module.left_matrix(&blade)?.flatten());
    }
    let faithful = rref_span(&action_vectors, dim_m * dim_m)?.dim() == dim_a;

    Ok(MoritaReport {
        algebra_dim: dim_a,
        module_dim: dim_m,
        quotient_dim: dim_b,
        dim_identity,
        end_a_dim,
        end_a_matches,
        right_action_injects,
        end_b_dim,
        end_b_matches,
        faithful,
    })
}
