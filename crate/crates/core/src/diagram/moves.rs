//! Reidemeister moves as surgeries on the planar map, plus a random-diagram
//! generator built from them. The moves are used by invariance tests and by
//! the paranoid verification mode.

use super::{crossing_of, opp, pos_of, rot, PlanarDiagram, Slot};
use crate::error::Error;
use crate::Result;
use rand::Rng;

#[derive(Clone, Copy, Debug)]
pub struct R1Variant {
    /// Rotational placement of the loop, 0..4.
    pub turn: u32,
    /// Over-parity of the new crossing.
    pub over_odd: bool,
}

/// Insert a kink on the edge through slot `s` (ignored for the unknot).
pub fn r1_add(d: &PlanarDiagram, s: Slot, variant: R1Variant) -> PlanarDiagram {
    let v = variant.turn & 3;
    if d.is_unknot() {
        // one-crossing unknot: loop plus a closing edge
        let z0 = 0u32;
        let mut pairing = vec![0; 4];
        let (l1, l2) = (rot(z0, v), rot(z0, v + 1));
        let (x1, x2) = (rot(z0, v + 2), rot(z0, v + 3));
        pairing[l1 as usize] = l2;
        pairing[l2 as usize] = l1;
        pairing[x1 as usize] = x2;
        pairing[x2 as usize] = x1;
        return PlanarDiagram::from_parts(pairing, vec![variant.over_odd]).unwrap();
    }
    let n = d.crossings();
    let mut pairing: Vec<Slot> = (0..d.slot_count()).map(|t| d.pairing(t)).collect();
    let mut over_odd: Vec<bool> = (0..n).map(|c| d.over_odd(c)).collect();
    let a = s;
    let b = d.pairing(s);
    let z0 = 4 * n as u32;
    pairing.extend([0, 0, 0, 0]);
    over_odd.push(variant.over_odd);
    let (l1, l2) = (rot(z0, v), rot(z0, v + 1));
    let (x1, x2) = (rot(z0, v + 2), rot(z0, v + 3));
    pairing[l1 as usize] = l2;
    pairing[l2 as usize] = l1;
    pairing[a as usize] = x1;
    pairing[x1 as usize] = a;
    pairing[b as usize] = x2;
    pairing[x2 as usize] = b;
    PlanarDiagram::from_parts(pairing, over_odd).expect("r1 surgery must stay planar")
}

/// Push the edge through `u` across the edge through `w`; both must lie on a
/// common face and be distinct edges. `finger_over` puts the pushed strand on
/// top at both new crossings.
pub fn r2_add(d: &PlanarDiagram, u: Slot, w: Slot, finger_over: bool) -> Result<PlanarDiagram> {
    if d.is_unknot() {
        return Err(Error::Other("r2 needs at least one edge pair".into()));
    }
    let share_face = d
        .faces()
        .iter()
        .any(|f| f.contains(&u) && f.contains(&w));
    if !share_face {
        return Err(Error::Other("r2 sites must share a face".into()));
    }
    let (u2, w2) = (d.pairing(u), d.pairing(w));
    if u == w || u == w2 {
        return Err(Error::Other("r2 sites must be distinct edges".into()));
    }
    let n = d.crossings();
    let mut pairing: Vec<Slot> = (0..d.slot_count()).map(|t| d.pairing(t)).collect();
    let mut over_odd: Vec<bool> = (0..n).map(|c| d.over_odd(c)).collect();
    pairing.extend([0; 8]);
    over_odd.push(finger_over);
    over_odd.push(finger_over);
    // z1, z2 sit on the w-edge; the finger crosses east-west over both.
    let z1 = 4 * n as u32; // slots z1+0=S, +1=E, +2=N, +3=W
    let z2 = z1 + 4;
    let mut link = |a: Slot, b: Slot| {
        pairing[a as usize] = b;
        pairing[b as usize] = a;
    };
    link(w, z1); // w south side
    link(z1 + 2, z2); // w between the crossings
    link(z2 + 2, w2); // w north side
    link(u, z1 + 1); // finger leaves the u edge
    link(z1 + 3, z2 + 3); // finger tip
    link(z2 + 1, u2); // finger returns
    PlanarDiagram::from_parts(pairing, over_odd).expect("r2 surgery must stay planar")
}

/// A triangular face on which some strand may slide across the opposite
/// crossing.
#[derive(Clone, Copy, Debug)]
pub struct R3Site {
    /// Arrival slots at the three corners, in face order.
    arrivals: [Slot; 3],
}

/// All legal R3 sites of the diagram.
pub fn r3_sites(d: &PlanarDiagram) -> Vec<R3Site> {
    let mut out = Vec::new();
    if d.is_unknot() {
        return out;
    }
    for face in d.faces() {
        if face.len() != 3 {
            continue;
        }
        let c: Vec<usize> = face.iter().map(|&s| crossing_of(s)).collect();
        if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
            continue;
        }
        // arrivals: a_i = pairing of the previous source slot
        for shift in 0..3 {
            let a = [
                d.pairing(face[(shift + 2) % 3]),
                d.pairing(face[shift]),
                d.pairing(face[(shift + 1) % 3]),
            ];
            // strand through corners 1 and 2 slides if its over-ness agrees
            // at both corners
            let x_at_c1 = d.is_over_slot(rot(a[0], 1));
            let x_at_c2 = d.is_over_slot(a[1]);
            if x_at_c1 == x_at_c2 {
                out.push(R3Site { arrivals: a });
            }
        }
    }
    out
}

/// Perform the slide at a site returned by `r3_sites`.
pub fn r3_slide(d: &PlanarDiagram, site: &R3Site) -> PlanarDiagram {
    let [a1, a2, a3] = site.arrivals;
    let (c1, c2, c3) = (crossing_of(a1), crossing_of(a2), crossing_of(a3));
    // strand roles: X through c1,c2; Y through c2,c3; Z through c3,c1
    let x_over_y = d.is_over_slot(a2);
    let x_over_z = d.is_over_slot(rot(a1, 1));
    let y_over_z = d.is_over_slot(a3);
    debug_assert_eq!(x_over_y, x_over_z, "illegal r3 site");

    // hexagon boundary points, old slots
    let old_ext = [
        rot(a1, 3), // P0, X at c1
        rot(a3, 2), // P1, Y at c3
        rot(a3, 3), // P2, Z at c3
        rot(a2, 2), // P3, X at c2
        rot(a2, 3), // P4, Y at c2
        rot(a1, 2), // P5, Z at c1
    ];
    let partners: Vec<Slot> = old_ext.iter().map(|&s| d.pairing(s)).collect();

    // rebuilt corners: c2 := X*Y, c1 := X*Z, c3 := Y*Z, with slot layouts
    //   X*Y: 0 = X toward P0, 1 = Y toward P1, 2 = X toward X*Z, 3 = Y toward Y*Z
    //   X*Z: 0 = X toward X*Y, 1 = Z toward P2, 2 = X toward P3, 3 = Z toward Y*Z
    //   Y*Z: 0 = Y toward X*Y, 1 = Z toward X*Z, 2 = Y toward P4, 3 = Z toward P5
    let xy = 4 * c2 as u32;
    let xz = 4 * c1 as u32;
    let yz = 4 * c3 as u32;
    let new_ext = [xy, xy + 1, xz + 1, xz + 2, yz + 2, yz + 3];

    let mut pairing: Vec<Slot> = (0..d.slot_count()).map(|t| d.pairing(t)).collect();
    let mut over_odd: Vec<bool> = (0..d.crossings()).map(|c| d.over_odd(c)).collect();
    let mut link = |p: &mut Vec<Slot>, a: Slot, b: Slot| {
        p[a as usize] = b;
        p[b as usize] = a;
    };
    // inner edges
    link(&mut pairing, xy + 2, xz);
    link(&mut pairing, xy + 3, yz);
    link(&mut pairing, xz + 3, yz + 1);
    // external edges, tracking partners that are themselves triangle stubs
    for k in 0..6 {
        let q = partners[k];
        if let Some(j) = old_ext.iter().position(|&e| e == q) {
            if k < j {
                link(&mut pairing, new_ext[k], new_ext[j]);
            }
        } else {
            link(&mut pairing, new_ext[k], q);
        }
    }
    // X runs on the even diagonal of both its crossings; Y even at Y*Z
    over_odd[c2] = !x_over_y;
    over_odd[c1] = !x_over_z;
    over_odd[c3] = !y_over_z;
    PlanarDiagram::from_parts(pairing, over_odd).expect("r3 surgery must stay planar")
}

/// Apply one random Reidemeister move (knot-type preserving).
pub fn random_move<R: Rng>(d: &PlanarDiagram, rng: &mut R) -> PlanarDiagram {
    for _ in 0..40 {
        match rng.gen_range(0..3) {
            0 => {
                let variant = R1Variant {
                    turn: rng.gen_range(0..4),
                    over_odd: rng.gen(),
                };
                let s = if d.is_unknot() {
                    0
                } else {
                    rng.gen_range(0..d.slot_count())
                };
                return r1_add(d, s, variant);
            }
            1 => {
                if d.is_unknot() {
                    continue;
                }
                let faces = d.faces();
                let f = &faces[rng.gen_range(0..faces.len())];
                if f.len() < 2 {
                    continue;
                }
                let u = f[rng.gen_range(0..f.len())];
                let w = f[rng.gen_range(0..f.len())];
                if let Ok(next) = r2_add(d, u, w, rng.gen()) {
                    return next;
                }
            }
            _ => {
                let sites = r3_sites(d);
                if sites.is_empty() {
                    continue;
                }
                return r3_slide(d, &sites[rng.gen_range(0..sites.len())]);
            }
        }
    }
    d.clone()
}

/// Random valid knot diagram: grow by R-moves, then flip random crossings so
/// the knot type varies.
pub fn random_diagram<R: Rng>(rng: &mut R, moves: usize) -> PlanarDiagram {
    let mut d = PlanarDiagram::unknot();
    for _ in 0..moves {
        d = random_move(&mut d.clone(), rng);
    }
    let n = d.crossings();
    if n > 0 {
        for c in 0..n {
            if rng.gen_bool(0.3) {
                d = d.flip_crossing(c);
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::TREFOIL_PD;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn r1_all_variants_planar() {
        let d = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        for turn in 0..4 {
            for over_odd in [false, true] {
                for s in 0..d.slot_count() {
                    let d2 = r1_add(&d, s, R1Variant { turn, over_odd });
                    assert_eq!(d2.crossings(), 4);
                }
            }
        }
    }

    #[test]
    fn r1_from_unknot() {
        let d = PlanarDiagram::unknot();
        let d2 = r1_add(&d, 0, R1Variant { turn: 1, over_odd: true });
        assert_eq!(d2.crossings(), 1);
    }

    #[test]
    fn r2_grows_by_two() {
        let d = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        let faces = d.faces();
        let f = faces.iter().find(|f| f.len() >= 2).unwrap();
        let d2 = r2_add(&d, f[0], f[1], true).unwrap();
        assert_eq!(d2.crossings(), 5);
    }

    #[test]
    fn r3_sites_exist_on_grown_diagrams() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen = 0;
        for _ in 0..30 {
            let d = random_diagram(&mut rng, 6);
            for site in r3_sites(&d) {
                let d2 = r3_slide(&d, &site);
                assert_eq!(d2.crossings(), d.crossings());
                seen += 1;
            }
        }
        assert!(seen > 0, "no r3 sites found in 30 random diagrams");
    }

    #[test]
    fn random_diagrams_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let d = random_diagram(&mut rng, 8);
            // from_parts already validated; exercise the round trip too
            let back = PlanarDiagram::parse_pd(&d.emit_pd()).unwrap();
            assert!(back.isomorphic(&d));
        }
    }

    #[test]
    fn slot_helpers() {
        assert_eq!(opp(5), 7);
        assert_eq!(pos_of(7), 3);
        assert_eq!(rot(7, 1), 4);
    }
}
