//! Recognize a quotient superalgebra as one of the named targets and produce
//! an explicit, re-checkable isomorphism witness.
//!
//! The dispatch is a dimension/parity fingerprint followed by a bounded
//! witness search: hinted elements first, then basis vectors, then small
//! rational combinations. All target algebras are at most four-dimensional,
//! so no general isomorphism testing is attempted.

use num_traits::{One, Zero};

use crate::linalg::rref_span;
use crate::reduction::QuotientAlgebra;
use crate::superblade::Parity;
use crate::{rat, ratio, Error, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraTag {
    Zero,
    Reals,
    Complexes,
    Quaternions,
    CliffPlus1,
    CliffMinus1,
    Mat1_1,
    Unknown,
}

impl AlgebraTag {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraTag::Zero => "zero",
            AlgebraTag::Reals => "R",
            AlgebraTag::Complexes => "C",
            AlgebraTag::Quaternions => "H",
            AlgebraTag::CliffPlus1 => "Cliff(+1)",
            AlgebraTag::CliffMinus1 => "Cliff(-1)",
            AlgebraTag::Mat1_1 => "Mat(1|1)",
            AlgebraTag::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub description: String,
    pub pass: bool,
}

/// Generator images in quotient coordinates together with the relations that
/// were verified for them.
#[derive(Debug, Clone)]
pub struct IsoWitness {
    pub tag: AlgebraTag,
    pub images: Vec<(String, Vec<Rat>)>,
    pub relations: Vec<RelationCheck>,
}

impl IsoWitness {
    fn empty(tag: AlgebraTag) -> Self {
        IsoWitness {
            tag,
            images: Vec::new(),
            relations: Vec::new(),
        }
    }
}

fn neg(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| -x).collect()
}

fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Candidate vectors in search order: hints, basis vectors, then small
/// combinations (integers for general use, half-integers when
/// `half_steps` is set, which the idempotent search needs).
fn candidates(b: &QuotientAlgebra, hints: &[(String, Vec<Rat>)], half_steps: bool) -> Vec<Vec<Rat>> {
    let dim = b.dim();
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for (_, v) in hints {
        if v.len() == dim && !is_zero_vec(v) {
            out.push(v.clone());
        }
    }
    for i in 0..dim {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        out.push(v);
    }
    if dim <= 4 {
        let steps: Vec<Rat> = if half_steps {
            (-4..=4).map(|k| ratio(k, 2)).collect()
        } else {
            (-2..=2).map(rat).collect()
        };
        let mut stack = vec![Vec::new()];
        for _ in 0..dim {
            let mut next = Vec::new();
            for prefix in &stack {
                for s in &steps {
                    let mut v = prefix.clone();
                    v.push(s.clone());
                    next.push(v);
                }
            }
            stack = next;
        }
        for v in stack {
            if !is_zero_vec(&v) {
                out.push(v);
            }
        }
    }
    out
}

fn independent_with_unit(b: &QuotientAlgebra, others: &[&[Rat]]) -> bool {
    let mut rows = vec![b.unit().to_vec()];
    rows.extend(others.iter().map(|v| v.to_vec()));
    match rref_span(&rows, b.dim()) {
        Ok(s) => s.dim() == rows.len(),
        Err(_) => false,
    }
}

fn is_commutative(b: &QuotientAlgebra) -> bool {
    let dim = b.dim();
    let sc = b.constants();
    (0..dim).all(|i| (0..dim).all(|j| sc[i][j] == sc[j][i]))
}

/// Identify a quotient algebra, returning a tag and a witness whose relations
/// all verified. Failure to recognize yields `Unknown` with an empty witness.
pub fn identify(b: &QuotientAlgebra, hints: &[(String, Vec<Rat>)]) -> (AlgebraTag, IsoWitness) {
    let (even, odd) = b.parity_split();
    let result = match (even, odd) {
        (0, 0) => Some(IsoWitness::empty(AlgebraTag::Zero)),
        (1, 0) => Some(IsoWitness::empty(AlgebraTag::Reals)),
        (1, 1) => find_clifford_line(b, hints),
        (2, 0) => find_complexes(b, hints),
        (4, 0) => find_quaternions(b, hints),
        (2, 2) => find_mat11(b, hints),
        _ => None,
    };
    match result {
        Some(w) if w.relations.iter().all(|r| r.pass) => (w.tag, w),
        _ => (AlgebraTag::Unknown, IsoWitness::empty(AlgebraTag::Unknown)),
    }
}

fn find_clifford_line(b: &QuotientAlgebra, hints: &[(String, Vec<Rat>)]) -> Option<IsoWitness> {
    for t in candidates(b, hints, false) {
        if b.coords_parity(&t) != Some(Parity::Odd) || is_zero_vec(&t) {
            continue;
        }
        let square = b.mul_coords(&t, &t);
        let tag = if square == b.unit() {
            AlgebraTag::CliffMinus1
        } else if square == neg(b.unit()) {
            AlgebraTag::CliffPlus1
        } else {
            continue;
        };
        let sign = if tag == AlgebraTag::CliffMinus1 { "+1" } else { "-1" };
        return Some(IsoWitness {
            tag,
            images: vec![("t".to_string(), t.clone())],
            relations: vec![
                RelationCheck {
                    description: format!("t odd, t^2 = {sign}"),
                    pass: true,
                },
                RelationCheck {
                    description: "1, t independent".to_string(),
                    pass: independent_with_unit(b, &[&t]),
                },
            ],
        });
    }
    None
}

fn find_complexes(b: &QuotientAlgebra, hints: &[(String, Vec<Rat>)]) -> Option<IsoWitness> {
    if !is_commutative(b) {
        return None;
    }
    for z in candidates(b, hints, false) {
        if b.coords_parity(&z) != Some(Parity::Even) {
            continue;
        }
        if b.mul_coords(&z, &z) != neg(b.unit()) {
            continue;
        }
        return Some(IsoWitness {
            tag: AlgebraTag::Complexes,
            images: vec![("z".to_string(), z.clone())],
            relations: vec![
                RelationCheck {
                    description: "z^2 = -1, commutative".to_string(),
                    pass: true,
                },
                RelationCheck {
                    description: "1, z independent".to_string(),
                    pass: independent_with_unit(b, &[&z]),
                },
            ],
        });
    }
    None
}

fn find_quaternions(b: &QuotientAlgebra, hints: &[(String, Vec<Rat>)]) -> Option<IsoWitness> {
    let minus_one = neg(b.unit());
    let cands = candidates(b, hints, false);
    let roots: Vec<&Vec<Rat>> = cands
        .iter()
        .filter(|v| b.mul_coords(v, v) == minus_one)
        .collect();
    for (a, i) in roots.iter().enumerate() {
        for j in roots.iter().skip(a + 1) {
            let ij = b.mul_coords(i, j);
            let ji = b.mul_coords(j, i);
            if ij != neg(&ji) {
                continue;
            }
            let k = ij;
            if b.mul_coords(&k, &k) != minus_one {
                continue;
            }
            if !independent_with_unit(b, &[i, j, &k]) {
                continue;
            }
            let ijk = b.mul_coords(&b.mul_coords(i, j), &k);
            return Some(IsoWitness {
                tag: AlgebraTag::Quaternions,
                images: vec![
                    ("i".to_string(), (*i).clone()),
                    ("j".to_string(), (*j).clone()),
                    ("k".to_string(), k.clone()),
                ],
                relations: vec![
                    RelationCheck {
                        description: "i^2 = j^2 = k^2 = -1".to_string(),
                        pass: true,
                    },
                    RelationCheck {
                        description: "ij = -ji = k".to_string(),
                        pass: true,
                    },
                    RelationCheck {
                        description: "ijk = -1".to_string(),
                        pass: ijk == minus_one,
                    },
                    RelationCheck {
                        description: "1, i, j, k independent".to_string(),
                        pass: true,
                    },
                ],
            });
        }
    }
    None
}

fn find_mat11(b: &QuotientAlgebra, hints: &[(String, Vec<Rat>)]) -> Option<IsoWitness> {
    for e in candidates(b, hints, true) {
        if b.coords_parity(&e) != Some(Parity::Even) {
            continue;
        }
        if is_zero_vec(&e) || e == b.unit() {
            continue;
        }
        if b.mul_coords(&e, &e) != e {
            continue;
        }
        let corner_ok = corner_is_line(b, &e);
        if !corner_ok {
            continue;
        }
        return Some(IsoWitness {
            tag: AlgebraTag::Mat1_1,
            images: vec![("e".to_string(), e.clone())],
            relations: vec![
                RelationCheck {
                    description: "e^2 = e, e != 0, e != 1".to_string(),
                    pass: true,
                },
                RelationCheck {
                    description: "dim eBe = (1|0)".to_string(),
                    pass: true,
                },
            ],
        });
    }
    None
}

/// The corner algebra eBe must be the span of e alone, purely even.
fn corner_is_line(b: &QuotientAlgebra, e: &[Rat]) -> bool {
    let dim = b.dim();
    let mut rows = Vec::new();
    for i in 0..dim {
        let mut bi = vec![Rat::zero(); dim];
        bi[i] = Rat::one();
        rows.push(b.mul_coords(&b.mul_coords(e, &bi), e));
    }
    match rref_span(&rows, dim) {
        Ok(s) => {
            s.dim() == 1
                && s.basis_rows()
                    .iter()
                    .all(|r| b.coords_parity(r) == Some(Parity::Even))
        }
        Err(_) => false,
    }
}

/// Re-evaluate every relation of a witness directly from the structure
/// constants. Returns `Err` when the witness shape does not match its tag.
pub fn verify_relations(b: &QuotientAlgebra, witness: &IsoWitness) -> Result<bool, Error> {
    let image = |name: &str| -> Result<&Vec<Rat>, Error> {
        witness
            .images
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::InvalidAlgebra(format!("witness is missing image `{name}`")))
    };
    for (_, v) in &witness.images {
        if v.len() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: b.dim(),
                got: v.len(),
            });
        }
    }
    let minus_one = neg(b.unit());
    match witness.tag {
        AlgebraTag::Zero => Ok(b.dim() == 0),
        AlgebraTag::Reals => Ok(b.parity_split() == (1, 0)),
        AlgebraTag::Complexes => {
            let z = image("z")?;
            Ok(is_commutative(b)
                && b.coords_parity(z) == Some(Parity::Even)
                && b.mul_coords(z, z) == minus_one
                && independent_with_unit(b, &[z]))
        }
        AlgebraTag::Quaternions => {
            let i = image("i")?;
            let j = image("j")?;
            let k = image("k")?;
            let squares_ok = [i, j, k]
                .iter()
                .all(|v| b.mul_coords(v, v) == minus_one);
            let anti_ok = b.mul_coords(i, j) == neg(&b.mul_coords(j, i));
            let ijk = b.mul_coords(&b.mul_coords(i, j), k);
            Ok(squares_ok && anti_ok && ijk == minus_one && independent_with_unit(b, &[i, j, k]))
        }
        AlgebraTag::CliffMinus1 | AlgebraTag::CliffPlus1 => {
            let t = image("t")?;
            let expected = if witness.tag == AlgebraTag::CliffMinus1 {
                b.unit().to_vec()
            } else {
                minus_one
            };
            Ok(b.coords_parity(t) == Some(Parity::Odd)
                && b.mul_coords(t, t) == expected
                && independent_with_unit(b, &[t]))
        }
        AlgebraTag::Mat1_1 => {
            let e = image("e")?;
            Ok(b.coords_parity(e) == Some(Parity::Even)
                && !is_zero_vec(e)
                && *e != b.unit()
                && b.mul_coords(e, e) == *e
                && corner_is_line(b, e))
        }
        AlgebraTag::Unknown => Ok(false),
    }
}
