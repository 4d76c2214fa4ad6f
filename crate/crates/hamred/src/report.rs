//! Run a catalog entry through the full pipeline and assemble a report:
//! dimensions, membership checks, bracket tables, identification with a
//! verified witness, Morita checks, and optional randomized suites.
//!
//! JSON output is canonical: `serde_json` objects serialize with sorted
//! keys, rationals are rendered as "p/q" strings, and wall-clock timings
//! live under a separate "timings" key so reports can be compared byte for
//! byte after dropping that one key.

use std::time::Instant;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::catalog::CatalogEntry;
use crate::fuzz::{
    absorption_suite, antisymmetry_suite, associativity_suite, closure_suite, jacobi_suite,
    perturbation_suite, FuzzOutcome, Fuzzer,
};
use crate::identify::{identify, verify_relations, AlgebraTag, IsoWitness};
use crate::linalg::Subspace;
use crate::reduction::{
    build_quotient, classical_reduce, cyclic_module_of_ideal, endomorphism_algebra, left_ideal,
    lie_closure_dim, poisson_bracket, reduce, verify_bracket_table, MoritaReport,
};
use crate::superblade::{Element, Parity};
use crate::{rat_to_string, Error, Rat};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub action: String,
    pub version: String,
    pub dims: Vec<(String, usize)>,
    pub checks: Vec<Check>,
    pub tag: Option<AlgebraTag>,
    pub witness: Option<IsoWitness>,
    pub morita: Option<MoritaReport>,
    pub fuzz: Vec<FuzzOutcome>,
    pub timings_ms: Vec<(String, u128)>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.fuzz.iter().all(|f| f.pass())
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("action".into(), json!(self.action));
        root.insert("version".into(), json!(self.version));

        let mut dims = Map::new();
        for (k, v) in &self.dims {
            dims.insert(k.clone(), json!(v));
        }
        root.insert("dims".into(), Value::Object(dims));

        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect();
        root.insert("checks".into(), Value::Array(checks));

        let ident = match (&self.tag, &self.witness) {
            (Some(tag), Some(w)) => {
                let mut images = Map::new();
                for (name, coords) in &w.images {
                    let rendered: Vec<Value> =
                        coords.iter().map(|c| json!(rat_to_string(c))).collect();
                    images.insert(name.clone(), Value::Array(rendered));
                }
                let relations: Vec<Value> = w
                    .relations
                    .iter()
                    .map(|r| json!({"description": r.description, "pass": r.pass}))
                    .collect();
                json!({"tag": tag.as_str(), "images": images, "relations": relations})
            }
            _ => Value::Null,
        };
        root.insert("identification".into(), ident);

        let morita = match &self.morita {
            Some(m) => json!({
                "algebra_dim": m.algebra_dim,
                "module_dim": m.module_dim,
                "quotient_dim": m.quotient_dim,
                "dim_identity": m.dim_identity,
                "end_a_dim": m.end_a_dim,
                "end_a_matches": m.end_a_matches,
                "right_action_injects": m.right_action_injects,
                "end_b_dim": m.end_b_dim,
                "end_b_matches": m.end_b_matches,
                "faithful": m.faithful,
            }),
            None => Value::Null,
        };
        root.insert("morita".into(), morita);

        let fuzz: Vec<Value> = self
            .fuzz
            .iter()
            .map(|f| json!({"name": f.name, "trials": f.trials, "failures": f.failures}))
            .collect();
        root.insert("fuzz".into(), Value::Array(fuzz));

        root.insert("pass".into(), json!(self.pass()));

        let mut timings = Map::new();
        for (k, v) in &self.timings_ms {
            timings.insert(k.clone(), json!(*v as u64));
        }
        root.insert("timings".into(), Value::Object(timings));
        Value::Object(root)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} ==\n", self.action));
        let dims_line: Vec<String> = self
            .dims
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&format!("dims: {}\n", dims_line.join(" ")));
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("[{mark}] {}\n", c.name));
            } else {
                out.push_str(&format!("[{mark}] {} ({})\n", c.name, c.detail));
            }
        }
        if let (Some(tag), Some(w)) = (&self.tag, &self.witness) {
            out.push_str(&format!("identified as: {tag}\n"));
            for (name, coords) in &w.images {
                let rendered: Vec<String> = coords.iter().map(rat_to_string).collect();
                out.push_str(&format!("  {name} -> [{}]\n", rendered.join(", ")));
            }
        }
        for f in &self.fuzz {
            let mark = if f.pass() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "[{mark}] fuzz {}: {} failures in {} trials\n",
                f.name, f.failures, f.trials
            ));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.pass() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn push_dim_check(
    checks: &mut Vec<Check>,
    name: &str,
    expected: Option<usize>,
    got: usize,
) {
    if let Some(e) = expected {
        checks.push(Check {
            name: name.to_string(),
            pass: e == got,
            detail: format!("expected {e}, got {got}"),
        });
    }
}

/// Run one catalog entry end to end. `fuzz_trials` adds the randomized
/// suites with that many trials each.
pub fn run_entry(entry: &CatalogEntry, fuzz_trials: Option<usize>) -> Result<Report, Error> {
    if entry.spec.allows_odd {
        run_module_entry(entry, fuzz_trials)
    } else {
        run_reduction_entry(entry, fuzz_trials)
    }
}

fn run_reduction_entry(
    entry: &CatalogEntry,
    fuzz_trials: Option<usize>,
) -> Result<Report, Error> {
    let spec = &entry.spec;
    let expected = &entry.expected;
    let mut checks = Vec::new();
    let mut dims = vec![("algebra".to_string(), spec.algebra_dim())];
    let mut timings = Vec::new();

    // bracket table and Lie closure
    let t = Instant::now();
    if !spec.expected_brackets.is_empty() {
        let br = verify_bracket_table(spec)?;
        for c in &br.checks {
            checks.push(Check {
                name: format!("bracket [g{}, g{}]", c.i + 1, c.j + 1),
                pass: c.pass,
                detail: format!("expected {}, got {}", c.expected, c.actual),
            });
        }
    }
    if let Some(cd) = expected.closure_dim {
        let got = lie_closure_dim(&spec.signature, &spec.generators)?;
        push_dim_check(&mut checks, "Lie closure dimension", Some(cd), got);
    }
    timings.push(("brackets".to_string(), t.elapsed().as_millis()));

    // the reduction itself
    let t = Instant::now();
    let (reduction, classical_brackets) = if entry.classical {
        let cr = classical_reduce(spec)?;
        (cr.reduction, Some(cr.brackets))
    } else {
        (reduce(spec)?, None)
    };
    timings.push(("reduction".to_string(), t.elapsed().as_millis()));
    let _ = classical_brackets; // rep-basis brackets; generator classes are checked below

    let (qe, qo) = reduction.quotient.parity_split();
    dims.push(("ideal".to_string(), reduction.ideal.dim()));
    dims.push(("invariants".to_string(), reduction.invariants.dim()));
    dims.push(("intersection".to_string(), reduction.intersection.dim()));
    dims.push(("quotient_even".to_string(), qe));
    dims.push(("quotient_odd".to_string(), qo));
    dims.push(("module_even".to_string(), reduction.module_dim.0));
    dims.push(("module_odd".to_string(), reduction.module_dim.1));

    push_dim_check(&mut checks, "ideal dimension", expected.ideal_dim, reduction.ideal.dim());
    push_dim_check(
        &mut checks,
        "invariant dimension",
        expected.invariant_dim,
        reduction.invariants.dim(),
    );
    push_dim_check(
        &mut checks,
        "intersection dimension",
        expected.intersection_dim,
        reduction.intersection.dim(),
    );
    if let Some((e, o)) = expected.quotient_dim {
        checks.push(Check {
            name: "quotient dimension".to_string(),
            pass: (qe, qo) == (e, o),
            detail: format!("expected ({e}|{o}), got ({qe}|{qo})"),
        });
    }
    if let Some((e, o)) = expected.module_dim {
        checks.push(Check {
            name: "module dimension".to_string(),
            pass: reduction.module_dim == (e, o),
            detail: format!(
                "expected ({e}|{o}), got ({}|{})",
                reduction.module_dim.0, reduction.module_dim.1
            ),
        });
    }

    // membership checks
    for (name, f, member) in &expected.ideal_members {
        let got = reduction.ideal.contains(&f.coords())?;
        checks.push(Check {
            name: format!("{name} {} ideal", if *member { "in" } else { "not in" }),
            pass: got == *member,
            detail: String::new(),
        });
    }
    for (name, f, member) in &expected.intersection_members {
        let got = reduction.intersection.contains(&f.coords())?;
        checks.push(Check {
            name: format!(
                "{name} {} intersection",
                if *member { "in" } else { "not in" }
            ),
            pass: got == *member,
            detail: String::new(),
        });
    }
    for (name, w) in &expected.annihilated {
        let mut pass = true;
        for g in &spec.generators {
            if !g.checked_mul(w)?.is_zero() {
                pass = false;
            }
        }
        checks.push(Check {
            name: format!("generators annihilate {name}"),
            pass,
            detail: String::new(),
        });
    }

    // the invariants must contain the unit and every hinted element
    let one = Element::one(spec.signature.clone());
    checks.push(Check {
        name: "1 in invariants".to_string(),
        pass: reduction.invariants.contains(&one.coords())?,
        detail: String::new(),
    });
    for (name, f) in &spec.hints {
        checks.push(Check {
            name: format!("{name} in invariants"),
            pass: reduction.invariants.contains(&f.coords())?,
            detail: String::new(),
        });
    }

    // identification
    let t = Instant::now();
    let hint_coords: Vec<(String, Vec<Rat>)> = spec
        .hints
        .iter()
        .filter_map(|(name, f)| reduction.quotient_coords(f).map(|c| (name.clone(), c)))
        .collect();
    let (tag, witness) = identify(&reduction.quotient, &hint_coords);
    if let Some(e) = expected.tag {
        checks.push(Check {
            name: "identification".to_string(),
            pass: tag == e,
            detail: format!("expected {e}, got {tag}"),
        });
        checks.push(Check {
            name: "isomorphism witness verified".to_string(),
            pass: verify_relations(&reduction.quotient, &witness).unwrap_or(false),
            detail: String::new(),
        });
    }
    timings.push(("identification".to_string(), t.elapsed().as_millis()));

    // classical extras: generator-class products vanish and Poisson brackets
    // of the hinted classes match
    if entry.classical {
        let class_of = |name: &str| -> Option<Vec<Rat>> {
            spec.hints
                .iter()
                .find(|(n, _)| n == name)
                .and_then(|(_, f)| reduction.quotient_coords(f))
        };
        let mut products_vanish = true;
        for (ni, fi) in &spec.hints {
            for (nj, fj) in &spec.hints {
                let (ci, cj) = match (class_of(ni), class_of(nj)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        products_vanish = false;
                        continue;
                    }
                };
                let prod = reduction.quotient.mul_coords(&ci, &cj);
                if !prod.iter().all(|c| c.is_zero()) {
                    products_vanish = false;
                }
                let _ = (fi, fj);
            }
        }
        checks.push(Check {
            name: "quotient class products vanish".to_string(),
            pass: products_vanish,
            detail: String::new(),
        });
        for (ni, nj, expected_elem) in &expected.classical_brackets {
            let fi = spec.hints.iter().find(|(n, _)| n == ni).map(|(_, f)| f);
            let fj = spec.hints.iter().find(|(n, _)| n == nj).map(|(_, f)| f);
            let pass = match (fi, fj) {
                (Some(fi), Some(fj)) => {
                    let pb = poisson_bracket(fi, fj)?;
                    reduction.quotient_coords(&pb).is_some()
                        && reduction.quotient_coords(&pb)
                            == reduction.quotient_coords(expected_elem)
                }
                _ => false,
            };
            checks.push(Check {
                name: format!("{{{ni}, {nj}}} = {expected_elem}"),
                pass,
                detail: String::new(),
            });
        }
    }

    // Morita witness
    let mut morita = None;
    if !entry.classical && reduction.quotient.dim() > 0 {
        let t = Instant::now();
        let module = cyclic_module_of_ideal(&spec.signature, reduction.ideal.clone())?;
        let mr = crate::reduction::morita_check(spec, &reduction, &module)?;
        for (name, pass) in [
            ("Morita dimension identity", mr.dim_identity),
            ("End_A(M) matches quotient", mr.end_a_matches),
            ("right quotient action injects", mr.right_action_injects),
            ("double centralizer recovers dim A", mr.end_b_matches),
            ("left action faithful", mr.faithful),
        ] {
            checks.push(Check {
                name: name.to_string(),
                pass,
                detail: String::new(),
            });
        }
        morita = Some(mr);
        timings.push(("morita".to_string(), t.elapsed().as_millis()));
    }

    // randomized suites
    let mut fuzz = Vec::new();
    if let Some(n) = fuzz_trials {
        let t = Instant::now();
        let mut fz = Fuzzer::from_env();
        fuzz.push(associativity_suite(&mut fz, &spec.signature, n)?);
        fuzz.push(antisymmetry_suite(&mut fz, &spec.signature, n)?);
        fuzz.push(jacobi_suite(&mut fz, &spec.signature, n)?);
        fuzz.push(absorption_suite(&mut fz, spec, &reduction.ideal, n)?);
        fuzz.push(closure_suite(&mut fz, spec, &reduction.invariants, n)?);
        fuzz.push(perturbation_suite(&mut fz, spec, &reduction, n.min(100))?);
        timings.push(("fuzz".to_string(), t.elapsed().as_millis()));
    }

    Ok(Report {
        action: spec.name.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        dims,
        checks,
        tag: Some(tag),
        witness: Some(witness),
        morita,
        fuzz,
        timings_ms: timings,
    })
}

/// The module-only entry (an odd isotropic generator): no invariant
/// pipeline; checks the cyclic module, the endomorphism algebra, and the
/// identification of the ambient algebra itself.
fn run_module_entry(entry: &CatalogEntry, fuzz_trials: Option<usize>) -> Result<Report, Error> {
    let spec = &entry.spec;
    let expected = &entry.expected;
    let mut checks = Vec::new();
    let mut timings = Vec::new();

    let t = Instant::now();
    let ideal = left_ideal(spec)?;
    let module = cyclic_module_of_ideal(&spec.signature, ideal.clone())?;
    let (me, mo) = module.parity_split();
    timings.push(("reduction".to_string(), t.elapsed().as_millis()));

    let dims = vec![
        ("algebra".to_string(), spec.algebra_dim()),
        ("ideal".to_string(), ideal.dim()),
        ("module_even".to_string(), me),
        ("module_odd".to_string(), mo),
    ];
    push_dim_check(&mut checks, "ideal dimension", expected.ideal_dim, ideal.dim());
    if let Some((e, o)) = expected.module_dim {
        checks.push(Check {
            name: "module dimension".to_string(),
            pass: (me, mo) == (e, o),
            detail: format!("expected ({e}|{o}), got ({me}|{mo})"),
        });
    }

    // the ambient algebra as a structure-constant algebra, identified with
    // the hinted elements
    let t = Instant::now();
    let dim = spec.algebra_dim();
    let reps: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v
        })
        .collect();
    let ambient = build_quotient(&spec.signature, &reps, &Subspace::empty(dim))?;
    let hint_coords: Vec<(String, Vec<Rat>)> = spec
        .hints
        .iter()
        .map(|(name, f)| (name.clone(), f.coords()))
        .collect();
    let (tag, witness) = identify(&ambient, &hint_coords);
    if let Some(e) = expected.tag {
        checks.push(Check {
            name: "ambient algebra identification".to_string(),
            pass: tag == e,
            detail: format!("expected {e}, got {tag}"),
        });
        checks.push(Check {
            name: "isomorphism witness verified".to_string(),
            pass: verify_relations(&ambient, &witness).unwrap_or(false),
            detail: String::new(),
        });
    }
    timings.push(("identification".to_string(), t.elapsed().as_millis()));

    // End over the ambient algebra of the cyclic module must be (1|0)
    let t = Instant::now();
    let actions: Vec<_> = module
        .actions
        .iter()
        .map(|l| (l.clone(), Parity::Odd))
        .collect();
    let end = endomorphism_algebra(&actions, &module.parities)?;
    let split = end.parity_split();
    checks.push(Check {
        name: "endomorphism algebra dimension".to_string(),
        pass: split == (1, 0),
        detail: format!("expected (1|0), got ({}|{})", split.0, split.1),
    });
    let (end_tag, _) = identify(&end, &[]);
    checks.push(Check {
        name: "endomorphism algebra identification".to_string(),
        pass: end_tag == AlgebraTag::Reals,
        detail: format!("expected R, got {end_tag}"),
    });
    timings.push(("morita".to_string(), t.elapsed().as_millis()));

    let mut fuzz = Vec::new();
    if let Some(n) = fuzz_trials {
        let t = Instant::now();
        let mut fz = Fuzzer::from_env();
        fuzz.push(associativity_suite(&mut fz, &spec.signature, n)?);
        fuzz.push(antisymmetry_suite(&mut fz, &spec.signature, n)?);
        fuzz.push(jacobi_suite(&mut fz, &spec.signature, n)?);
        fuzz.push(absorption_suite(&mut fz, spec, &ideal, n)?);
        timings.push(("fuzz".to_string(), t.elapsed().as_millis()));
    }

    Ok(Report {
        action: spec.name.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        dims,
        checks,
        tag: Some(tag),
        witness: Some(witness),
        morita: None,
        fuzz,
        timings_ms: timings,
    })
}

/// Bracket-normalization checks that span both Spin(3) actions at once:
/// the nine cross-brackets vanish, the quantized Casimir identities hold,
/// and the zero-signature Casimir identity recovers the volume element.
pub fn spin3_cross_report() -> Result<Report, Error> {
    use crate::catalog::{spin3_generators, top_blade};
    use crate::ratio;
    use crate::superblade::Signature;

    let mut checks = Vec::new();
    let t = Instant::now();

    let sig = Signature::cliff(4);
    let minus = spin3_generators(&sig, false);
    let plus = spin3_generators(&sig, true);
    let minus = [minus.0, minus.1, minus.2];
    let plus = [plus.0, plus.1, plus.2];
    let mut cross_zero = true;
    for g in &minus {
        for h in &plus {
            if !g.checked_supercommutator(h)?.is_zero() {
                cross_zero = false;
            }
        }
    }
    checks.push(Check {
        name: "nine cross-brackets vanish".to_string(),
        pass: cross_zero,
        detail: String::new(),
    });

    // a_+-^2 = (+-theta - 1)/2
    let theta = top_blade(&sig);
    let one = Element::one(sig.clone());
    for (name, a, sign) in [("a+", &plus[0], 1i64), ("a-", &minus[0], -1)] {
        let expected = theta.scale(&ratio(sign, 2)).sub(&one.scale(&ratio(1, 2)));
        checks.push(Check {
            name: format!("Casimir {name}^2 = ({}theta - 1)/2", if sign > 0 { "" } else { "-" }),
            pass: a.checked_mul(a)? == expected,
            detail: String::new(),
        });
    }

    // zero signature: +-2 a_+-^2 = x1 x2 x3 x4
    let gsig = Signature::grassmann(4);
    let gminus = spin3_generators(&gsig, false);
    let gplus = spin3_generators(&gsig, true);
    let volume = top_blade(&gsig);
    for (name, a, sign) in [("a+", &gplus.0, 1i64), ("a-", &gminus.0, -1)] {
        let got = a.checked_mul(a)?.scale(&crate::rat(2 * sign));
        checks.push(Check {
            name: format!("classical {}2 {name}^2 = x1 x2 x3 x4", if sign > 0 { "" } else { "-" }),
            pass: got == volume,
            detail: String::new(),
        });
    }

    let timings = vec![("brackets".to_string(), t.elapsed().as_millis())];
    Ok(Report {
        action: "spin3-normalization".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        dims: Vec::new(),
        checks,
        tag: None,
        witness: None,
        morita: None,
        fuzz: Vec::new(),
        timings_ms: timings,
    })
}

fn parity_str(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Serialize a structure-constant algebra:
/// `{dim, parities, unit, structure_constants}` with "p/q" strings.
pub fn quotient_json(q: &crate::reduction::QuotientAlgebra) -> Value {
    let coords = |v: &[Rat]| -> Value {
        Value::Array(v.iter().map(|c| json!(rat_to_string(c))).collect())
    };
    json!({
        "dim": q.dim(),
        "parities": q.parities().iter().map(|p| json!(parity_str(*p))).collect::<Vec<_>>(),
        "unit": coords(q.unit()),
        "structure_constants": q
            .constants()
            .iter()
            .map(|row| Value::Array(row.iter().map(|col| coords(col)).collect()))
            .collect::<Vec<_>>(),
    })
}

/// Parse the schema produced by [`quotient_json`].
pub fn quotient_from_json(value: &Value) -> Result<crate::reduction::QuotientAlgebra, Error> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidAlgebra("algebra JSON must be an object".into()))?;
    let parities: Vec<Parity> = obj
        .get("parities")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidAlgebra("missing array field `parities`".into()))?
        .iter()
        .map(|v| match v.as_str() {
            Some("even") => Ok(Parity::Even),
            Some("odd") => Ok(Parity::Odd),
            _ => Err(Error::InvalidAlgebra(
                "parities must be \"even\" or \"odd\"".into(),
            )),
        })
        .collect::<Result<_, _>>()?;
    if let Some(d) = obj.get("dim").and_then(|v| v.as_u64()) {
        if d as usize != parities.len() {
            return Err(Error::InvalidAlgebra(format!(
                "field `dim` = {} disagrees with {} parities",
                d,
                parities.len()
            )));
        }
    }
    let coords = |v: &Value, what: &str| -> Result<Vec<Rat>, Error> {
        v.as_array()
            .ok_or_else(|| Error::InvalidAlgebra(format!("{what} must be an array")))?
            .iter()
            .map(|c| match c {
                Value::String(s) => crate::rat_from_str(s),
                Value::Number(n) => n
                    .as_i64()
                    .map(crate::rat)
                    .ok_or_else(|| Error::InvalidAlgebra("coordinates must be exact".into())),
                _ => Err(Error::InvalidAlgebra(
                    "coordinates must be strings or integers".into(),
                )),
            })
            .collect()
    };
    let unit = coords(
        obj.get("unit")
            .ok_or_else(|| Error::InvalidAlgebra("missing field `unit`".into()))?,
        "unit",
    )?;
    let sc_val = obj
        .get("structure_constants")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidAlgebra("missing array field `structure_constants`".into()))?;
    let mut sc = Vec::with_capacity(sc_val.len());
    for row in sc_val {
        let row = row
            .as_array()
            .ok_or_else(|| Error::InvalidAlgebra("structure constants must be a 3d array".into()))?;
        let mut out_row = Vec::with_capacity(row.len());
        for col in row {
            out_row.push(coords(col, "structure constant entry")?);
        }
        sc.push(out_row);
    }
    crate::reduction::QuotientAlgebra::new(parities, unit, sc)
}

/// Full serialization of a reduction outcome for the `reduce` command:
/// subspace bases as element strings plus the quotient algebra.
pub fn reduction_json(
    spec: &crate::reduction::ActionSpec,
    reduction: &crate::reduction::ReductionResult,
) -> Result<Value, Error> {
    let rows_to_elements = |rows: &[Vec<Rat>]| -> Result<Vec<Value>, Error> {
        rows.iter()
            .map(|r| {
                Element::from_coords(spec.signature.clone(), r).map(|e| json!(e.to_string()))
            })
            .collect()
    };
    Ok(json!({
        "ideal_basis": rows_to_elements(reduction.ideal.basis_rows())?,
        "invariant_basis": rows_to_elements(reduction.invariants.basis_rows())?,
        "intersection_basis": rows_to_elements(reduction.intersection.basis_rows())?,
        "representatives": rows_to_elements(&reduction.reps)?,
        "quotient": quotient_json(&reduction.quotient),
        "module_dim": {"even": reduction.module_dim.0, "odd": reduction.module_dim.1},
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn spin3_minus_report_passes() {
        let entry = catalog::spin3_action(false);
        let report = run_entry(&entry, None).unwrap();
        assert!(report.pass(), "failing checks: {:?}",
            report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        assert_eq!(report.tag, Some(AlgebraTag::Quaternions));
    }

    #[test]
    fn json_is_deterministic_outside_timings() {
        let entry = catalog::spin3_action(true);
        let mut a = run_entry(&entry, Some(25)).unwrap().to_json();
        let mut b = run_entry(&entry, Some(25)).unwrap().to_json();
        a.as_object_mut().unwrap().remove("timings");
        b.as_object_mut().unwrap().remove("timings");
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn lagrangian_report_passes() {
        let entry = catalog::lagrangian_example().unwrap();
        let report = run_entry(&entry, None).unwrap();
        assert!(report.pass(), "failing checks: {:?}",
            report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        assert_eq!(report.tag, Some(AlgebraTag::Mat1_1));
    }
}
