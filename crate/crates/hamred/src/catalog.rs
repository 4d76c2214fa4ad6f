//! The built-in actions: both Spin(3) actions on Cliff(4), G2 on Cliff(7),
//! Spin(7) and Spin(8) on Cliff(8), the split Lagrangian example on
//! Cliff(1,1), and the classical (Grassmann) Spin(3) action.
//!
//! Each entry keeps hardcoded element data and, where a generation rule
//! exists (G2 from the 3-form, Spin(7) from the 4-form), cross-checks the
//! rule against the hardcoded list at construction time.


use crate::identify::AlgebraTag;
use crate::linalg::rref_span;
use crate::reduction::ActionSpec;
use crate::superblade::{parse_element, Element, Signature};
use crate::{rat, Error};

/// Expected outcomes recorded for an entry, checked by the verify commands
/// and the acceptance suite.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub ideal_dim: Option<usize>,
    pub invariant_dim: Option<usize>,
    pub intersection_dim: Option<usize>,
    pub quotient_dim: Option<(usize, usize)>,
    pub module_dim: Option<(usize, usize)>,
    pub tag: Option<AlgebraTag>,
    pub closure_dim: Option<usize>,
    /// (name, element, expected membership) against the left ideal.
    pub ideal_members: Vec<(String, Element, bool)>,
    /// (name, element, expected membership) against the intersection.
    pub intersection_members: Vec<(String, Element, bool)>,
    /// named elements w with alpha * w = 0 for every generator alpha.
    pub annihilated: Vec<(String, Element)>,
    /// (hint_i, hint_j, expected): the induced Poisson bracket of the two
    /// hinted classes must equal the class of the expected element.
    pub classical_brackets: Vec<(String, String, Element)>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: ActionSpec,
    pub expected: Expected,
    /// Whether the entry runs the classical (Poisson) pipeline.
    pub classical: bool,
}

fn parse(sig: &Signature, text: &str) -> Element {
    parse_element(text, sig).expect("catalog element parses")
}

/// The volume blade x_1 ... x_n.
pub fn top_blade(sig: &Signature) -> Element {
    let mut f = Element::one(sig.clone());
    for i in 1..=sig.len() {
        f = f.mul(&Element::generator(sig.clone(), i).unwrap());
    }
    f
}

/// The Spin(3) comoment images on four odd variables, with
/// (w,x,y,z) = (x1,x2,x3,x4):
/// a = (wx +- yz)/2, b = (wy +- zx)/2, c = (wz +- xy)/2.
pub fn spin3_generators(sig: &Signature, plus: bool) -> (Element, Element, Element) {
    let s = if plus { "+" } else { "-" };
    let a = parse(sig, &format!("1/2 x1 x2 {s} 1/2 x3 x4"));
    let b = parse(sig, &format!("1/2 x1 x3 {s} 1/2 x4 x2"));
    let c = parse(sig, &format!("1/2 x1 x4 {s} 1/2 x2 x3"));
    (a, b, c)
}

/// Spin(3) acting on Cliff(4). The bracket table is normalized to
/// [a,b] = +-2c and cyclic; hints are the opposite triple, which spans the
/// invariants together with 1 and the volume element.
pub fn spin3_action(plus: bool) -> CatalogEntry {
    let sig = Signature::cliff(4);
    let (a, b, c) = spin3_generators(&sig, plus);
    let (ha, hb, hc) = spin3_generators(&sig, !plus);
    let sign = if plus { 1 } else { -1 };
    let mut spec = ActionSpec::new(
        if plus { "spin3-plus" } else { "spin3-minus" },
        sig.clone(),
        vec![a.clone(), b.clone(), c.clone()],
    )
    .expect("spin3 generators are valid");
    spec.expected_brackets = vec![
        (0, 1, c.scale(&rat(2 * sign))),
        (1, 2, a.scale(&rat(2 * sign))),
        (2, 0, b.scale(&rat(2 * sign))),
    ];
    let opposite = if plus { "-" } else { "+" };
    spec.hints = vec![
        (format!("a{opposite}"), ha),
        (format!("b{opposite}"), hb),
        (format!("c{opposite}"), hc),
    ];

    let theta = top_blade(&sig);
    // the ideal pins theta to -1 for the minus action and to +1 for the plus
    let theta_witness = if plus {
        ("theta-1".to_string(), theta.sub(&Element::one(sig.clone())))
    } else {
        ("theta+1".to_string(), theta.add(&Element::one(sig.clone())))
    };
    let mut ideal_members = vec![(theta_witness.0.clone(), theta_witness.1.clone(), true)];
    if !plus {
        // an explicit eight-element ideal basis for the minus action
        for (name, text) in [
            ("a-", "1/2 x1 x2 - 1/2 x3 x4"),
            ("b-", "1/2 x1 x3 + 1/2 x2 x4"),
            ("c-", "1/2 x1 x4 - 1/2 x2 x3"),
            ("w-xyz", "x1 - x2 x3 x4"),
            ("x+wyz", "x2 + x1 x3 x4"),
            ("y+wzx", "x3 - x1 x2 x4"),
            ("z+wxy", "x4 + x1 x2 x3"),
        ] {
            ideal_members.push((name.to_string(), parse(&sig, text), true));
        }
    }
    ideal_members.push(("1".to_string(), Element::one(sig.clone()), false));

    CatalogEntry {
        spec,
        expected: Expected {
            ideal_dim: Some(8),
            invariant_dim: Some(5),
            intersection_dim: Some(1),
            quotient_dim: Some((4, 0)),
            module_dim: Some((4, 4)),
            tag: Some(AlgebraTag::Quaternions),
            closure_dim: Some(3),
            intersection_members: vec![(theta_witness.0, theta_witness.1, true)],
            ideal_members,
            ..Expected::default()
        },
        classical: false,
    }
}

/// The 3-form whose stabilizer is G2, in a fixed coordinate frame.
pub fn g2_epsilon(sig: &Signature) -> Element {
    parse(
        sig,
        "x1 x2 x3 + x1 x4 x5 + x1 x6 x7 + x2 x4 x6 + x2 x7 x5 + x3 x7 x4 + x3 x6 x5",
    )
}

const G2_GENERATORS: [&str; 14] = [
    "x2 x3 - x4 x5",
    "x4 x5 - x6 x7",
    "x3 x1 - x4 x6",
    "x4 x6 - x7 x5",
    "x1 x2 - x7 x4",
    "x7 x4 - x6 x5",
    "x5 x1 - x6 x2",
    "x6 x2 - x3 x7",
    "x1 x4 - x2 x7",
    "x2 x7 - x3 x6",
    "x7 x1 - x2 x4",
    "x2 x4 - x5 x3",
    "x1 x6 - x5 x2",
    "x5 x2 - x4 x3",
];

/// G2 acting on Cliff(7): the 14 hardcoded quadratics, cross-checked as
/// differences of monomials of the quadratics e_i = d(epsilon)/d(x_i).
pub fn g2_action() -> Result<CatalogEntry, Error> {
    let sig = Signature::cliff(7);
    let eps = g2_epsilon(&sig);
    let generators: Vec<Element> = G2_GENERATORS.iter().map(|t| parse(&sig, t)).collect();

    // generation rule: every generator is the difference of two signed
    // monomials of some e_i
    for (g, text) in generators.iter().zip(G2_GENERATORS) {
        let mut matched = false;
        'outer: for i in 1..=7 {
            let e_i = eps.odd_partial(i)?;
            let monomials: Vec<Element> = e_i
                .terms()
                .map(|(b, c)| Element::from_blade(sig.clone(), *b, c.clone()))
                .collect();
            for (p, m1) in monomials.iter().enumerate() {
                for (q, m2) in monomials.iter().enumerate() {
                    if p != q && *g == m1.sub(m2) {
                        matched = true;
                        break 'outer;
                    }
                }
            }
        }
        if !matched {
            return Err(Error::CrossCheckFailed(format!(
                "G2 generator `{text}` is not a difference of monomials of any e_i"
            )));
        }
    }

    let theta = top_blade(&sig);
    let eps_bar = theta.mul(&eps);
    let mut spec = ActionSpec::new("g2", sig.clone(), generators)?;
    spec.hints = vec![
        ("theta".to_string(), theta.clone()),
        ("epsilon".to_string(), eps.clone()),
    ];

    let seven = Element::one(sig.clone()).scale(&rat(7));
    let seven_theta_plus_eps = theta.scale(&rat(7)).add(&eps);
    let seven_plus_eps_bar = seven.add(&eps_bar);
    Ok(CatalogEntry {
        spec,
        expected: Expected {
            ideal_dim: Some(112),
            invariant_dim: Some(4),
            intersection_dim: Some(2),
            quotient_dim: Some((1, 1)),
            module_dim: Some((8, 8)),
            tag: Some(AlgebraTag::CliffMinus1),
            closure_dim: Some(14),
            ideal_members: vec![
                ("7theta+eps".to_string(), seven_theta_plus_eps.clone(), true),
                ("7+epsbar".to_string(), seven_plus_eps_bar.clone(), true),
                ("1".to_string(), Element::one(sig.clone()), false),
            ],
            intersection_members: vec![
                ("7theta+eps".to_string(), seven_theta_plus_eps, true),
                ("7+epsbar".to_string(), seven_plus_eps_bar, true),
            ],
            annihilated: vec![("theta-eps".to_string(), theta.sub(&eps))],
            ..Expected::default()
        },
        classical: false,
    })
}

/// The Spin(7)-defining 4-form on eight odd variables.
pub fn spin7_phi(sig: &Signature) -> Element {
    parse(
        sig,
        "x1 x2 x3 x4 + x1 x2 x5 x6 + x1 x2 x7 x8 + x1 x3 x5 x7 - x1 x3 x6 x8 - x1 x4 x5 x8 \
         - x1 x4 x6 x7 + x5 x6 x7 x8 + x3 x4 x7 x8 + x3 x4 x5 x6 + x2 x4 x6 x8 - x2 x4 x5 x7 \
         - x2 x3 x6 x7 - x2 x3 x5 x8",
    )
}

/// Enumerate the raw Spin(7) generators: quadratics alpha = x_ij +- x_kl over
/// disjoint index pairs such that -alpha^2/2 - 1 is, with its sign, a
/// monomial of phi.
pub fn spin7_raw_alphas(sig: &Signature) -> Result<Vec<Element>, Error> {
    let phi = spin7_phi(sig);
    let minus_one = Element::one(sig.clone()).neg();
    let mut raw = Vec::new();
    let mut pairs = Vec::new();
    for i in 1..=8usize {
        for j in (i + 1)..=8 {
            pairs.push((i, j));
        }
    }
    for (pi, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in pairs.iter().skip(pi + 1) {
            if [i, j].iter().any(|a| *a == k || *a == l) {
                continue;
            }
            for sign in [1i64, -1] {
                let xij = parse(sig, &format!("x{i} x{j}"));
                let xkl = parse(sig, &format!("x{k} x{l}"));
                let alpha = xij.add(&xkl.scale(&rat(sign)));
                // -alpha^2/2 - 1 must be a signed monomial appearing in phi
                let probe = alpha
                    .mul(&alpha)
                    .scale(&crate::ratio(-1, 2))
                    .add(&minus_one);
                let mut terms = probe.terms();
                if let (Some((blade, coeff)), None) = (terms.next(), terms.next()) {
                    if phi.coeff(*blade) == *coeff {
                        raw.push(alpha);
                    }
                }
            }
        }
    }
    Ok(raw)
}

/// Spin(7) acting on Cliff(8): generators are the canonical RREF basis of
/// the 42 raw quadratics.
pub fn spin7_action() -> Result<CatalogEntry, Error> {
    let sig = Signature::cliff(8);
    let raw = spin7_raw_alphas(&sig)?;
    if raw.len() != 42 {
        return Err(Error::CrossCheckFailed(format!(
            "Spin(7) enumeration found {} raw quadratics, expected 42",
            raw.len()
        )));
    }
    let vectors: Vec<Vec<crate::Rat>> = raw.iter().map(|a| a.coords()).collect();
    let span = rref_span(&vectors, sig.dim())?;
    if span.dim() != 21 {
        return Err(Error::CrossCheckFailed(format!(
            "Spin(7) raw quadratics span dimension {}, expected 21",
            span.dim()
        )));
    }
    let generators: Vec<Element> = span
        .basis_rows()
        .iter()
        .map(|r| Element::from_coords(sig.clone(), r))
        .collect::<Result<_, _>>()?;

    let phi = spin7_phi(&sig);
    let theta = top_blade(&sig);
    let mut spec = ActionSpec::new("spin7", sig.clone(), generators)?;
    spec.hints = vec![
        ("phi".to_string(), phi.clone()),
        ("theta".to_string(), theta.clone()),
    ];
    let one = Element::one(sig.clone());
    Ok(CatalogEntry {
        spec,
        expected: Expected {
            ideal_dim: Some(240),
            invariant_dim: Some(3),
            intersection_dim: Some(2),
            quotient_dim: Some((1, 0)),
            module_dim: Some((8, 8)),
            tag: Some(AlgebraTag::Reals),
            closure_dim: Some(21),
            ideal_members: vec![
                ("phi+14".to_string(), phi.add(&one.scale(&rat(14))), true),
                ("theta-1".to_string(), theta.sub(&one), true),
                ("1".to_string(), one.clone(), false),
            ],
            intersection_members: vec![
                ("phi+14".to_string(), phi.add(&one.scale(&rat(14))), true),
                ("theta-1".to_string(), theta.sub(&one), true),
            ],
            annihilated: vec![("phi-1-theta".to_string(), phi.sub(&one).sub(&theta))],
            ..Expected::default()
        },
        classical: false,
    })
}

/// Spin(8) acting on Cliff(8): all 28 quadratics x_i x_j. The reduction
/// vanishes because the ideal contains invertible elements.
pub fn spin8_action() -> Result<CatalogEntry, Error> {
    let sig = Signature::cliff(8);
    let mut generators = Vec::new();
    for i in 1..=8usize {
        for j in (i + 1)..=8 {
            generators.push(parse(&sig, &format!("x{i} x{j}")));
        }
    }
    let spec = ActionSpec::new("spin8", sig.clone(), generators)?;
    Ok(CatalogEntry {
        spec,
        expected: Expected {
            ideal_dim: Some(256),
            invariant_dim: Some(2),
            intersection_dim: Some(2),
            quotient_dim: Some((0, 0)),
            module_dim: Some((0, 0)),
            tag: Some(AlgebraTag::Zero),
            closure_dim: Some(28),
            ideal_members: vec![("1".to_string(), Element::one(sig.clone()), true)],
            ..Expected::default()
        },
        classical: false,
    })
}

/// The split Lagrangian example: Cliff(1,1) with the single odd generator
/// x1 - x2 spanning an isotropic line. Exercises the module and
/// endomorphism machinery, not the invariant pipeline.
pub fn lagrangian_example() -> Result<CatalogEntry, Error> {
    let sig = Signature::cliff_pq(1, 1);
    let generator = parse(&sig, "x1 - x2");
    // construct directly: validation must see allows_odd already set
    let spec = ActionSpec {
        name: "lagrangian".to_string(),
        signature: sig.clone(),
        generators: vec![generator],
        expected_brackets: Vec::new(),
        hints: Vec::new(),
        allows_odd: true,
    };
    spec.validate()?;
    let idempotent = parse(&sig, "1/2 - 1/2 x1 x2");
    let mut entry = CatalogEntry {
        spec,
        expected: Expected {
            ideal_dim: Some(2),
            module_dim: Some((1, 1)),
            tag: Some(AlgebraTag::Mat1_1),
            ..Expected::default()
        },
        classical: false,
    };
    entry.spec.hints = vec![("projector".to_string(), idempotent)];
    Ok(entry)
}

/// The classical limit: the same Spin(3) minus-action formulas on the
/// Grassmann algebra of four odd variables.
pub fn classical_spin3_entry() -> Result<CatalogEntry, Error> {
    let sig = Signature::grassmann(4);
    let (a, b, c) = spin3_generators(&sig, false);
    let (ha, hb, hc) = spin3_generators(&sig, true);
    let mut spec = ActionSpec::new("classical-spin3", sig.clone(), vec![a, b, c])?;
    spec.hints = vec![
        ("a+".to_string(), ha.clone()),
        ("b+".to_string(), hb.clone()),
        ("c+".to_string(), hc.clone()),
    ];
    let theta = top_blade(&sig);
    Ok(CatalogEntry {
        spec,
        expected: Expected {
            ideal_dim: Some(8),
            invariant_dim: Some(5),
            intersection_dim: Some(1),
            quotient_dim: Some((4, 0)),
            module_dim: Some((4, 4)),
            intersection_members: vec![("theta".to_string(), theta, true)],
            classical_brackets: vec![
                ("a+".to_string(), "b+".to_string(), hc.scale(&rat(2))),
                ("b+".to_string(), "c+".to_string(), ha.scale(&rat(2))),
                ("c+".to_string(), "a+".to_string(), hb.scale(&rat(2))),
            ],
            ..Expected::default()
        },
        classical: true,
    })
}

/// All built-in entries in catalog order.
pub fn all_entries() -> Result<Vec<CatalogEntry>, Error> {
    Ok(vec![
        spin3_action(false),
        spin3_action(true),
        g2_action()?,
        spin7_action()?,
        spin8_action()?,
        lagrangian_example()?,
        classical_spin3_entry()?,
    ])
}

/// Look up a built-in entry by name.
pub fn entry_by_name(name: &str) -> Result<Option<CatalogEntry>, Error> {
    Ok(all_entries()?
        .into_iter()
        .find(|e| e.spec.name == name))
}

/// Load a custom action from JSON:
/// `{ "name": ..., "n": ..., "signature": [-1|0|1, ...], "generators": ["..."] }`.
pub fn action_from_json(value: &serde_json::Value) -> Result<ActionSpec, Error> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidAlgebra("action JSON must be an object".into()))?;
    let name = obj
        .get("name")
        .and_then(|v| v.as_str())
        .ok_or_else(|| Error::InvalidAlgebra("missing string field `name`".into()))?;
    let sig_entries: Vec<i8> = obj
        .get("signature")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidAlgebra("missing array field `signature`".into()))?
        .iter()
        .map(|v| {
            v.as_i64()
                .and_then(|x| i8::try_from(x).ok())
                .ok_or_else(|| Error::InvalidAlgebra("signature entries must be -1, 0, or 1".into()))
        })
        .collect::<Result<_, _>>()?;
    if let Some(n) = obj.get("n").and_then(|v| v.as_u64()) {
        if n as usize != sig_entries.len() {
            return Err(Error::InvalidAlgebra(format!(
                "field `n` = {} disagrees with signature length {}",
                n,
                sig_entries.len()
            )));
        }
    }
    let sig = Signature::new(sig_entries)?;
    let generators = obj
        .get("generators")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidAlgebra("missing array field `generators`".into()))?
        .iter()
        .map(|v| {
            let text = v
                .as_str()
                .ok_or_else(|| Error::InvalidAlgebra("generators must be strings".into()))?;
            parse_element(text, &sig)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let spec = ActionSpec {
        name: name.to_string(),
        signature: sig,
        generators,
        expected_brackets: Vec::new(),
        hints: Vec::new(),
        allows_odd: obj
            .get("allows_odd")
            .and_then(|v| v.as_bool())
            .unwrap_or(false),
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use crate::superblade::Blade;

    #[test]
    fn e1_matches_reference_value() {
        let sig = Signature::cliff(7);
        let eps = g2_epsilon(&sig);
        assert_eq!(
            eps.odd_partial(1).unwrap(),
            parse(&sig, "x2 x3 + x4 x5 + x6 x7")
        );
    }

    #[test]
    fn g2_cross_check_passes() {
        assert!(g2_action().is_ok());
    }

    #[test]
    fn g2_monomial_ideal_identity() {
        // x1 x4 x5 x6 x7 (x2 x3 - x4 x5) = theta + x1 x6 x7
        let sig = Signature::cliff(7);
        let lhs = parse(&sig, "x1 x4 x5 x6 x7").mul(&parse(&sig, "x2 x3 - x4 x5"));
        let rhs = top_blade(&sig).add(&parse(&sig, "x1 x6 x7"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_squares_to_one() {
        for n in [7usize, 8] {
            let sig = Signature::cliff(n);
            let theta = top_blade(&sig);
            assert_eq!(theta.mul(&theta), Element::one(sig.clone()));
        }
    }

    #[test]
    fn epsilon_bar_is_theta_epsilon_quartic() {
        let sig = Signature::cliff(7);
        let eps = g2_epsilon(&sig);
        let eps_bar = top_blade(&sig).mul(&eps);
        assert!(eps_bar.terms().all(|(b, _)| b.grade() == 4));
        assert_eq!(eps_bar.num_terms(), 7);
    }

    #[test]
    fn phi_square_law() {
        // phi^2 = 14 theta + 14 - 12 phi
        let sig = Signature::cliff(8);
        let phi = spin7_phi(&sig);
        let theta = top_blade(&sig);
        let expected = theta
            .scale(&rat(14))
            .add(&Element::one(sig.clone()).scale(&rat(14)))
            .add(&phi.scale(&rat(-12)));
        assert_eq!(phi.mul(&phi), expected);
        assert_eq!(theta.mul(&phi), phi);
        assert_eq!(phi.mul(&theta), phi);
    }

    #[test]
    fn spin7_enumeration_counts() {
        let sig = Signature::cliff(8);
        let raw = spin7_raw_alphas(&sig).unwrap();
        assert_eq!(raw.len(), 42);
        let span = rref_span(&raw.iter().map(|a| a.coords()).collect::<Vec<_>>(), 256).unwrap();
        assert_eq!(span.dim(), 21);
    }

    #[test]
    fn spin7_kappa_lambda_splitting() {
        // for alpha = x13 - x57: phi = (x1357 + x2468) + kappa + lambda with
        // alpha * kappa = 0 and alpha * lambda = 0
        let sig = Signature::cliff(8);
        let phi = spin7_phi(&sig);
        let alpha = parse(&sig, "x1 x3 - x5 x7");
        let head = parse(&sig, "x1 x3 x5 x7 + x2 x4 x6 x8");
        let kappa = parse(&sig, "x1 x2 x3 x4 - x1 x3 x6 x8 + x5 x6 x7 x8 - x2 x4 x5 x7");
        let lambda = parse(
            &sig,
            "x1 x2 x5 x6 + x1 x2 x7 x8 - x1 x4 x5 x8 - x1 x4 x6 x7 + x3 x4 x7 x8 \
             + x3 x4 x5 x6 - x2 x3 x6 x7 - x2 x3 x5 x8",
        );
        assert_eq!(phi, head.add(&kappa).add(&lambda));
        assert!(alpha.mul(&kappa).is_zero());
        assert!(alpha.mul(&lambda).is_zero());
    }

    #[test]
    fn spin8_counts_and_invertible_generator() {
        let entry = spin8_action().unwrap();
        assert_eq!(entry.spec.generators.len(), 28);
        let sig = entry.spec.signature.clone();
        let x12 = parse(&sig, "x1 x2");
        assert_eq!(x12.mul(&x12.neg()), Element::one(sig));
    }

    #[test]
    fn lagrangian_generator_is_isotropic() {
        let entry = lagrangian_example().unwrap();
        let g = &entry.spec.generators[0];
        assert!(g.mul(g).is_zero());
        let e = &entry.spec.hints[0].1;
        assert_eq!(e.mul(e), *e);
    }

    #[test]
    fn casimir_identities() {
        // quantum: a_pm^2 = (\pm theta - 1)/2; classical: +-2 a_pm^2 = wxyz
        let cliff = Signature::cliff(4);
        let gr = Signature::grassmann(4);
        for plus in [true, false] {
            let sign = if plus { 1 } else { -1 };
            let (a, b, c) = spin3_generators(&cliff, plus);
            let theta = top_blade(&cliff);
            let expected = theta
                .scale(&ratio(sign, 2))
                .sub(&Element::one(cliff.clone()).scale(&ratio(1, 2)));
            for g in [&a, &b, &c] {
                assert_eq!(g.mul(g), expected);
            }
            let (ag, _, _) = spin3_generators(&gr, plus);
            assert_eq!(ag.mul(&ag).scale(&rat(2 * sign)), top_blade(&gr));
        }
    }

    #[test]
    fn all_generators_even_except_lagrangian() {
        for entry in all_entries().unwrap() {
            for g in &entry.spec.generators {
                let parity = g.parity().unwrap();
                if entry.spec.name == "lagrangian" {
                    assert_eq!(parity, crate::superblade::Parity::Odd);
                } else {
                    assert_eq!(parity, crate::superblade::Parity::Even);
                }
            }
        }
    }

    #[test]
    fn action_from_json_round_trip() {
        let value: serde_json::Value = serde_json::from_str(
            r#"{"name":"custom","n":3,"signature":[-1,-1,-1],
                "generators":["x1 x2","1/2 x2 x3"]}"#,
        )
        .unwrap();
        let spec = action_from_json(&value).unwrap();
        assert_eq!(spec.name, "custom");
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(
            spec.generators[1].coeff(Blade::from_indices(&[2, 3])),
            ratio(1, 2)
        );

        let bad: serde_json::Value =
            serde_json::from_str(r#"{"name":"x","signature":[2],"generators":[]}"#).unwrap();
        assert!(action_from_json(&bad).is_err());
    }
}
