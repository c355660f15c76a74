//! Kauffman bracket (brute-force state sum and Temperley-Lieb transfer
//! sweep over slice forms) and the normalized Jones polynomial.
//!
//! Conventions, pinned by the trefoil fixtures: at a crossing whose
//! under-strand meets slot u, the A-smoothing joins (u, u+1) and (u+2, u+3);
//! each state contributes A^(a-b) * delta^(loops-1) with delta = -A^2 - A^-2;
//! V = (-A)^(-3w) * bracket with t = A^-4.

use crate::diagram::{to_slice_form, OrientedDiagram, PlanarDiagram, SliceEvent, SliceForm};
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::Result;
use num_bigint::BigInt;
use std::collections::HashMap;

pub const BRUTE_FORCE_GUARD: usize = 20;

/// A non-crossing perfect matching on an even number of boundary points,
/// encoded as a balanced-parenthesis word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TLState {
    word: Vec<bool>, // true = '('
}

impl TLState {
    pub fn empty() -> Self {
        TLState { word: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Partner indices of the matching.
    pub fn partners(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.word.len()];
        let mut stack = Vec::new();
        for (i, &open) in self.word.iter().enumerate() {
            if open {
                stack.push(i);
            } else {
                let j = stack.pop().expect("balanced word");
                out[i] = j;
                out[j] = i;
            }
        }
        debug_assert!(stack.is_empty());
        out
    }

    pub fn from_partners(partners: &[usize]) -> Self {
        let word = partners
            .iter()
            .enumerate()
            .map(|(i, &j)| i < j)
            .collect();
        TLState { word }
    }
}

fn delta_pow(k: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for _ in 0..k {
        p = p * LaurentPoly::loop_delta();
    }
    p
}

/// Kauffman bracket by full state-sum enumeration. Guarded to 20 crossings.
pub fn bracket_bruteforce(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let n = d.crossings();
    if n > BRUTE_FORCE_GUARD {
        return Err(Error::SizeGuard(n, BRUTE_FORCE_GUARD));
    }
    if d.is_unknot() {
        return Ok(LaurentPoly::one());
    }
    let m = 4 * n;
    let mut total = LaurentPoly::zero();
    let mut parent: Vec<u32> = vec![0; m];
    for state in 0u64..(1 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        fn union(parent: &mut [u32], a: u32, b: u32) -> bool {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra == rb {
                return false;
            }
            parent[ra as usize] = rb;
            true
        }
        let mut loops = m;
        for s in 0..m as u32 {
            if union(&mut parent, s, d.pairing(s)) {
                loops -= 1;
            }
        }
        let mut exp = 0i64;
        for c in 0..n {
            let u = if d.over_odd(c) { 4 * c as u32 } else { 4 * c as u32 + 1 };
            let a_smoothing = (state >> c) & 1 == 0;
            if a_smoothing {
                exp += 1;
            } else {
                exp -= 1;
            }
            let r = |k| crate::diagram::rot(u, k);
            let joins = if a_smoothing {
                [(r(0), r(1)), (r(2), r(3))]
            } else {
                [(r(1), r(2)), (r(3), r(0))]
            };
            for (a, b) in joins {
                if union(&mut parent, a, b) {
                    loops -= 1;
                }
            }
        }
        let mut term = delta_pow(loops - 1);
        term.scale(exp, &BigInt::from(1));
        total += &term;
    }
    Ok(total)
}

/// Kauffman bracket by Temperley-Lieb transfer sweep over a slice form.
pub fn bracket_sliced(s: &SliceForm) -> LaurentPoly {
    let mut states: HashMap<Vec<usize>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    let delta = LaurentPoly::loop_delta();
    for (k, ev) in s.events.iter().enumerate() {
        let mut next: HashMap<Vec<usize>, LaurentPoly> = HashMap::new();
        match *ev {
            SliceEvent::Cup(i) => {
                let i = i - 1;
                for (partners, coeff) in states {
                    let mut p: Vec<usize> = partners
                        .iter()
                        .map(|&x| if x >= i { x + 2 } else { x })
                        .collect();
                    p.insert(i, 0);
                    p.insert(i + 1, 0);
                    p[i] = i + 1;
                    p[i + 1] = i;
                    next.insert(p, coeff);
                }
            }
            SliceEvent::Cap(i) => {
                let i = i - 1;
                let last = k + 1 == s.events.len();
                for (partners, coeff) in states {
                    let (pa, pb) = (partners[i], partners[i + 1]);
                    let mut c = coeff;
                    let mut p = partners.clone();
                    if pa == i + 1 {
                        // closing a loop; the final closure is the bracket's
                        // normalization loop and contributes no delta
                        if !last {
                            c = c * delta.clone();
                        }
                    } else {
                        p[pa] = pb;
                        p[pb] = pa;
                    }
                    p.remove(i + 1);
                    p.remove(i);
                    for x in p.iter_mut() {
                        if *x > i + 1 {
                            *x -= 2;
                        } else if *x > i {
                            *x -= 1;
                        }
                    }
                    *next.entry(p).or_insert_with(LaurentPoly::zero) += &c;
                }
            }
            SliceEvent::Cross(i, left_over) => {
                let i = i - 1;
                // identity smoothing weight, e_i smoothing weight
                let (w_id, w_e) = if left_over { (1i64, -1i64) } else { (-1, 1) };
                for (partners, coeff) in states {
                    // identity
                    let mut c_id = coeff.clone();
                    c_id.scale(w_id, &BigInt::from(1));
                    *next.entry(partners.clone()).or_insert_with(LaurentPoly::zero) += &c_id;
                    // e_i
                    let (pa, pb) = (partners[i], partners[i + 1]);
                    let mut c_e = coeff;
                    c_e.scale(w_e, &BigInt::from(1));
                    let mut p = partners.clone();
                    if pa == i + 1 {
                        c_e = c_e * delta.clone();
                    } else {
                        p[pa] = pb;
                        p[pb] = pa;
                        p[i] = i + 1;
                        p[i + 1] = i;
                    }
                    *next.entry(p).or_insert_with(LaurentPoly::zero) += &c_e;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    states.remove(&Vec::new()).unwrap_or_else(LaurentPoly::zero)
}

/// Bracket with automatic engine choice.
pub fn bracket(d: &PlanarDiagram) -> LaurentPoly {
    if d.crossings() <= 12 {
        bracket_bruteforce(d).expect("within guard")
    } else {
        let s = to_slice_form(d);
        bracket_sliced(&s)
    }
}

/// Normalized Jones polynomial V = (-A)^(-3w) * bracket, in the A variable
/// with every exponent divisible by 4 (t = A^-4).
pub fn jones(d: &OrientedDiagram) -> LaurentPoly {
    let w = d.writhe();
    let mut v = bracket(d.diagram());
    let norm = LaurentPoly::neg_a_pow(-3 * w);
    v = v * norm;
    debug_assert!(v.is_t_polynomial(), "jones of a knot must live in t");
    v
}

/// Jones of an unoriented diagram (orientation-independent for knots).
pub fn jones_of(d: &PlanarDiagram) -> LaurentPoly {
    jones(&d.orient())
}

/// True when the Jones polynomial equals 1.
pub fn jones_trivial(d: &PlanarDiagram) -> bool {
    jones_of(d).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{
        random_diagram, random_move, NEGATIVE_KINK_PD, POSITIVE_KINK_PD, TREFOIL_PD,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pd(s: &str) -> PlanarDiagram {
        PlanarDiagram::parse_pd(s).unwrap()
    }

    #[test]
    fn bracket_unknot() {
        assert!(bracket_bruteforce(&PlanarDiagram::unknot()).unwrap().is_one());
    }

    #[test]
    fn bracket_kinks() {
        // positive kink -> -A^3, negative -> -A^-3
        assert_eq!(
            bracket_bruteforce(&pd(POSITIVE_KINK_PD)).unwrap(),
            LaurentPoly::mono(3, -1)
        );
        assert_eq!(
            bracket_bruteforce(&pd(NEGATIVE_KINK_PD)).unwrap(),
            LaurentPoly::mono(-3, -1)
        );
    }

    #[test]
    fn left_trefoil_jones() {
        let d = pd(TREFOIL_PD);
        // 8-state sum gives A^7 - A^3 - A^-5 for this diagram
        let mut expect = LaurentPoly::mono(7, 1);
        expect = expect + LaurentPoly::mono(3, -1);
        expect = expect + LaurentPoly::mono(-5, -1);
        assert_eq!(bracket_bruteforce(&d).unwrap(), expect);
        let v = jones_of(&d);
        assert_eq!(v.t_string().unwrap(), "-4:-1,-3:1,-1:1");
    }

    #[test]
    fn right_trefoil_is_mirror() {
        let d = pd(TREFOIL_PD).mirror();
        let v = jones_of(&d);
        assert_eq!(v.t_string().unwrap(), "1:1,3:1,4:-1");
        assert_eq!(v, jones_of(&pd(TREFOIL_PD)).invert_variable());
    }

    #[test]
    fn jones_trivial_fixtures() {
        assert!(jones_trivial(&PlanarDiagram::unknot()));
        assert!(jones_trivial(&pd(POSITIVE_KINK_PD)));
        assert!(!jones_trivial(&pd(TREFOIL_PD)));
    }

    #[test]
    fn sliced_engine_matches_fixtures() {
        for s in ["", POSITIVE_KINK_PD, NEGATIVE_KINK_PD, TREFOIL_PD] {
            let d = pd(s);
            let brute = bracket_bruteforce(&d).unwrap();
            let sliced = bracket_sliced(&to_slice_form(&d));
            assert_eq!(brute, sliced, "engine disagreement on {s:?}");
        }
    }

    #[test]
    fn engines_agree_on_random_diagrams() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let d = random_diagram(&mut rng, 7);
            if d.crossings() > BRUTE_FORCE_GUARD {
                continue;
            }
            let brute = bracket_bruteforce(&d).unwrap();
            let sliced = bracket_sliced(&to_slice_form(&d));
            assert_eq!(brute, sliced, "disagreement on {}", d.emit_pd());
        }
    }

    #[test]
    fn jones_invariant_under_random_moves() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed_diag in [TREFOIL_PD, POSITIVE_KINK_PD] {
            let mut d = pd(seed_diag);
            let v0 = jones_of(&d);
            for _ in 0..10 {
                d = random_move(&d, &mut rng);
                if d.crossings() > 14 {
                    break;
                }
                assert_eq!(jones_of(&d), v0, "move broke jones on {}", d.emit_pd());
            }
        }
    }

    #[test]
    fn tl_state_round_trip() {
        let s = TLState::from_partners(&[1, 0, 3, 2]);
        assert_eq!(s.partners(), vec![1, 0, 3, 2]);
        let nested = TLState::from_partners(&[3, 2, 1, 0]);
        assert_eq!(nested.partners(), vec![3, 2, 1, 0]);
        assert!(TLState::empty().is_empty());
    }

    #[test]
    fn brute_force_guard() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut d = pd(TREFOIL_PD);
        while d.crossings() <= BRUTE_FORCE_GUARD {
            d = random_move(&d, &mut rng);
        }
        assert!(matches!(
            bracket_bruteforce(&d),
            Err(Error::SizeGuard(_, _))
        ));
    }
}
