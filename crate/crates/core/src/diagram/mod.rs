//! Knot diagrams as 4-valent planar combinatorial maps.
//!
//! A crossing holds four half-edge slots in counterclockwise rotation order,
//! positions 0..3. One diagonal (0,2) or (1,3) carries the over-strand, per a
//! crossing parity flag; freshly parsed PD codes put the over-strand on slots
//! 1 and 3 with the under-strand entering at slot 0. The pairing is a
//! fixed-point-free involution on slots matching half-edges along edges.

mod build;
mod moves;
mod slice;

pub use build::DiagramBuilder;
pub use moves::{r1_add, r2_add, r3_slide, r3_sites, random_diagram, random_move, R1Variant};
pub use slice::{to_slice_form, SliceEvent, SliceForm};

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};

/// Half-edge slot id: `4 * crossing + position`.
pub type Slot = u32;

#[inline]
pub fn crossing_of(s: Slot) -> usize {
    (s / 4) as usize
}

#[inline]
pub fn pos_of(s: Slot) -> u32 {
    s & 3
}

/// Slot reached by passing straight through the crossing.
#[inline]
pub fn opp(s: Slot) -> Slot {
    s ^ 2
}

/// Rotate within the crossing by `k` positions counterclockwise.
#[inline]
pub fn rot(s: Slot, k: u32) -> Slot {
    (s & !3) | ((s + k) & 3)
}

/// A knot diagram as a planar combinatorial map.
///
/// The 0-crossing unknot carries no crossings, so it is flagged explicitly
/// instead of being encoded as a degenerate map.
#[derive(Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    /// pairing[s] = slot at the other end of the edge through s.
    pairing: Vec<Slot>,
    /// Per crossing: true when slots 1 and 3 carry the over-strand.
    over_odd: Vec<bool>,
    unknot: bool,
}

impl std::fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.unknot {
            return write!(f, "PlanarDiagram(unknot)");
        }
        write!(f, "PlanarDiagram({})", self.emit_pd())
    }
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        PlanarDiagram {
            pairing: Vec::new(),
            over_odd: Vec::new(),
            unknot: true,
        }
    }

    pub fn is_unknot(&self) -> bool {
        self.unknot
    }

    /// Number of crossings.
    pub fn crossings(&self) -> usize {
        self.over_odd.len()
    }

    pub fn pairing(&self, s: Slot) -> Slot {
        self.pairing[s as usize]
    }

    pub fn over_odd(&self, crossing: usize) -> bool {
        self.over_odd[crossing]
    }

    /// True when the strand through slot `s` (and `opp(s)`) is the over-strand.
    pub fn is_over_slot(&self, s: Slot) -> bool {
        let odd = pos_of(s) & 1 == 1;
        odd == self.over_odd[crossing_of(s)]
    }

    pub fn slot_count(&self) -> u32 {
        self.pairing.len() as u32
    }

    /// Edges as canonical slot pairs (smaller slot first).
    pub fn edges(&self) -> Vec<(Slot, Slot)> {
        let mut out = Vec::with_capacity(self.pairing.len() / 2);
        for s in 0..self.slot_count() {
            let t = self.pairing(s);
            if s < t {
                out.push((s, t));
            }
        }
        out
    }

    /// Build from raw parts, validating all structural invariants.
    pub fn from_parts(pairing: Vec<Slot>, over_odd: Vec<bool>) -> Result<Self> {
        if pairing.len() != over_odd.len() * 4 {
            return Err(Error::Other("pairing/crossing size mismatch".into()));
        }
        if over_odd.is_empty() {
            return Ok(Self::unknot());
        }
        let d = PlanarDiagram {
            pairing,
            over_odd,
            unknot: false,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let m = self.slot_count();
        // fixed-point-free involution covering every slot
        for s in 0..m {
            let t = self.pairing(s);
            if t >= m || t == s || self.pairing(t) != s {
                return Err(Error::Other(format!("pairing is not an involution at {s}")));
            }
        }
        // single closed curve
        if !self.is_single_component() {
            return Err(Error::MultipleComponents);
        }
        // sphere planarity: V - E + F = 2
        let v = self.crossings() as i64;
        let e = v * 2;
        let f = self.faces().len() as i64;
        if v - e + f != 2 {
            return Err(Error::NonPlanar(v - e + f));
        }
        Ok(())
    }

    fn is_single_component(&self) -> bool {
        if self.unknot {
            return true;
        }
        // Walk the curve: entering slot s -> exit opp(s) -> next entering slot.
        let target = self.slot_count() / 2;
        let mut seen = 0u32;
        let mut s: Slot = 0;
        loop {
            seen += 1;
            s = self.pairing(opp(s));
            if s == 0 {
                break;
            }
            if seen > target {
                return false;
            }
        }
        seen == target
    }

    /// Faces of the rotation system. Each face is the cyclic list of the
    /// directed-edge source slots on its boundary.
    pub fn faces(&self) -> Vec<Vec<Slot>> {
        if self.unknot {
            // Jordan curve: two faces, no slots to record.
            return vec![Vec::new(), Vec::new()];
        }
        let m = self.slot_count();
        let mut visited = vec![false; m as usize];
        let mut faces = Vec::new();
        for start in 0..m {
            if visited[start as usize] {
                continue;
            }
            let mut face = Vec::new();
            let mut s = start;
            while !visited[s as usize] {
                visited[s as usize] = true;
                face.push(s);
                s = rot(self.pairing(s), 1);
            }
            faces.push(face);
        }
        faces
    }

    /// Flip the over/under data of every crossing (mirror image).
    pub fn mirror(&self) -> PlanarDiagram {
        PlanarDiagram {
            pairing: self.pairing.clone(),
            over_odd: self.over_odd.iter().map(|b| !b).collect(),
            unknot: self.unknot,
        }
    }

    /// Flip a single crossing (not a knot-preserving move; used by generators).
    pub fn flip_crossing(&self, c: usize) -> PlanarDiagram {
        let mut d = self.clone();
        d.over_odd[c] = !d.over_odd[c];
        d
    }

    /// Canonical orientation: direct the curve starting from slot 0.
    pub fn orient(&self) -> OrientedDiagram {
        let mut enters = vec![false; self.pairing.len()];
        if !self.unknot {
            let mut s: Slot = 0;
            loop {
                enters[s as usize] = true;
                s = self.pairing(opp(s));
                if s == 0 {
                    break;
                }
            }
        }
        OrientedDiagram {
            diagram: self.clone(),
            enters,
        }
    }

    /// Entering slots of the canonical traversal, in curve order.
    pub fn traversal(&self) -> Vec<Slot> {
        let mut out = Vec::new();
        if self.unknot {
            return out;
        }
        let mut s: Slot = 0;
        loop {
            out.push(s);
            s = self.pairing(opp(s));
            if s == 0 {
                break;
            }
        }
        out
    }

    /// Parse a PD code: comma separated `X[a,b,c,d]` tokens, edge labels
    /// 1..2n each appearing exactly twice; the empty string is the unknot.
    pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Self::unknot());
        }
        let mut labels: Vec<usize> = Vec::new();
        let mut rest = trimmed;
        loop {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let lower = rest.as_bytes()[0].to_ascii_lowercase();
            if lower != b'x' {
                return Err(Error::PdParse(format!("expected X[...], found {rest:.20?}")));
            }
            let open = rest
                .find('[')
                .ok_or_else(|| Error::PdParse("missing [".into()))?;
            let close = rest[open..]
                .find(']')
                .map(|i| i + open)
                .ok_or_else(|| Error::PdParse("missing ]".into()))?;
            let body = &rest[open + 1..close];
            let nums: Vec<usize> = body
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::PdParse(format!("bad edge label {t:?}")))
                })
                .collect::<Result<_>>()?;
            if nums.len() != 4 {
                return Err(Error::PdParse(format!(
                    "crossing needs 4 labels, got {}",
                    nums.len()
                )));
            }
            labels.extend(nums);
            rest = &rest[close + 1..];
        }
        let n = labels.len() / 4;
        let two_n = 2 * n;
        let mut occurrences: Vec<Vec<Slot>> = vec![Vec::new(); two_n + 1];
        for (slot, &lab) in labels.iter().enumerate() {
            if lab == 0 || lab > two_n {
                return Err(Error::PdParse(format!(
                    "edge label {lab} out of range 1..{two_n}"
                )));
            }
            occurrences[lab].push(slot as Slot);
        }
        let mut pairing = vec![0 as Slot; 4 * n];
        for lab in 1..=two_n {
            match occurrences[lab].as_slice() {
                [a, b] => {
                    pairing[*a as usize] = *b;
                    pairing[*b as usize] = *a;
                }
                occ => return Err(Error::BadEdgeLabel(lab, occ.len())),
            }
        }
        Self::from_parts(pairing, vec![true; n])
    }

    /// Emit a PD code string; `parse_pd(emit_pd(d))` is isomorphic to `d`.
    pub fn emit_pd(&self) -> String {
        if self.unknot {
            return String::new();
        }
        let order = self.traversal();
        let two_n = order.len();
        // label of the edge arriving at the k-th entering slot is k (1-based),
        // wrapping so the edge into the start carries label 2n.
        let mut label = vec![0usize; self.pairing.len()];
        for (k, &s) in order.iter().enumerate() {
            let lab = if k == 0 { two_n } else { k };
            label[s as usize] = lab;
            label[self.pairing(s) as usize] = lab;
        }
        let oriented = self.orient();
        let mut tokens = Vec::with_capacity(self.crossings());
        for c in 0..self.crossings() {
            let under = if self.over_odd[c] { 0 } else { 1 };
            let base = 4 * c as u32 + under;
            let u_in = if oriented.enters(base) { base } else { opp(base) };
            let parts: Vec<String> = (0..4)
                .map(|k| label[rot(u_in, k) as usize].to_string())
                .collect();
            tokens.push(format!("X[{}]", parts.join(",")));
        }
        tokens.join(",")
    }

    /// Canonical form under orientation-preserving map isomorphism
    /// (crossing relabelling plus per-crossing slot rotation).
    pub fn canonical_key(&self) -> Vec<u32> {
        if self.unknot {
            return vec![u32::MAX];
        }
        let n = self.crossings();
        let m = self.slot_count();
        let mut best: Option<Vec<u32>> = None;
        for start in 0..m {
            // crossing -> (canonical id, rotation offset)
            let mut assign: Vec<Option<(u32, u32)>> = vec![None; n];
            let mut order: Vec<u32> = Vec::with_capacity(n); // canonical id -> crossing
            assign[crossing_of(start)] = Some((0, pos_of(start)));
            order.push(crossing_of(start) as u32);
            let mut key: Vec<u32> = Vec::with_capacity(m as usize + n);
            let mut q = 0u32;
            while (q as usize) < 4 * order.len() {
                let id = q / 4;
                let pos = q & 3;
                let c = order[id as usize];
                let (_, off) = assign[c as usize].unwrap();
                let s = rot(4 * c, off + pos);
                let t = self.pairing(s);
                let ct = crossing_of(t);
                let canon_t = match assign[ct] {
                    Some((tid, toff)) => 4 * tid + ((pos_of(t) + 4 - toff) & 3),
                    None => {
                        let tid = order.len() as u32;
                        assign[ct] = Some((tid, pos_of(t)));
                        order.push(ct as u32);
                        4 * tid
                    }
                };
                key.push(canon_t);
                q += 1;
            }
            for &c in &order {
                let (_, off) = assign[c as usize].unwrap();
                let parity = self.over_odd[c as usize] ^ (off & 1 == 1);
                key.push(parity as u32);
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap()
    }

    pub fn isomorphic(&self, other: &PlanarDiagram) -> bool {
        if self.unknot || other.unknot {
            return self.unknot == other.unknot;
        }
        self.crossings() == other.crossings() && self.canonical_key() == other.canonical_key()
    }
}

/// A diagram with a direction chosen along its single component.
#[derive(Clone)]
pub struct OrientedDiagram {
    diagram: PlanarDiagram,
    enters: Vec<bool>,
}

impl OrientedDiagram {
    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    /// True when the strand enters the crossing at slot `s`.
    pub fn enters(&self, s: Slot) -> bool {
        self.enters[s as usize]
    }

    /// Sign of a crossing: +1 when rotating the over direction a quarter turn
    /// counterclockwise gives the under direction.
    pub fn crossing_sign(&self, c: usize) -> i64 {
        let d = &self.diagram;
        let under_base = if d.over_odd(c) { 0 } else { 1 };
        let u0 = 4 * c as u32 + under_base;
        let under_in = if self.enters(u0) { u0 } else { opp(u0) };
        let o0 = rot(u0, 1);
        let over_in = if self.enters(o0) { o0 } else { opp(o0) };
        if pos_of(over_in) == (pos_of(under_in) + 3) & 3 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.diagram.crossings())
            .map(|c| self.crossing_sign(c))
            .sum()
    }
}

/// JSON form of a diagram: the PD 4-tuples under the canonical labelling.
#[derive(Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[usize; 4]>,
}

impl PlanarDiagram {
    pub fn to_json_value(&self) -> DiagramJson {
        let pd = self.emit_pd();
        let mut crossings = Vec::new();
        if !pd.is_empty() {
            for token in pd.split("],") {
                let body = token.trim_matches(|c| !char::is_numeric(c) && c != ',');
                let nums: Vec<usize> = body
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().unwrap())
                    .collect();
                crossings.push([nums[0], nums[1], nums[2], nums[3]]);
            }
        }
        DiagramJson { crossings }
    }

    pub fn from_json_value(j: &DiagramJson) -> Result<Self> {
        let tokens: Vec<String> = j
            .crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c[0], c[1], c[2], c[3]))
            .collect();
        Self::parse_pd(&tokens.join(","))
    }
}

pub const TREFOIL_PD: &str = "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]";
/// R1 kink with writhe +1.
pub const POSITIVE_KINK_PD: &str = "X[1,1,2,2]";
/// R1 kink with writhe -1.
pub const NEGATIVE_KINK_PD: &str = "X[1,2,2,1]";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_unknot() {
        let d = PlanarDiagram::parse_pd("").unwrap();
        assert!(d.is_unknot());
        assert_eq!(d.faces().len(), 2);
        assert_eq!(d.emit_pd(), "");
    }

    #[test]
    fn trefoil_parses_with_five_faces() {
        let d = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        assert_eq!(d.crossings(), 3);
        assert_eq!(d.faces().len(), 5);
    }

    #[test]
    fn kink_has_three_faces() {
        let d = PlanarDiagram::parse_pd(POSITIVE_KINK_PD).unwrap();
        assert_eq!(d.crossings(), 1);
        assert_eq!(d.faces().len(), 3);
    }

    #[test]
    fn two_component_link_rejected() {
        let err = PlanarDiagram::parse_pd("X[1,3,2,4],X[2,4,1,3]").unwrap_err();
        assert!(matches!(err, Error::MultipleComponents), "{err}");
    }

    #[test]
    fn bad_labels_rejected() {
        assert!(PlanarDiagram::parse_pd("X[1,1,1,2]").is_err());
        assert!(PlanarDiagram::parse_pd("X[1,2,3,9]").is_err());
    }

    #[test]
    fn roundtrip_trefoil() {
        let d = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        let e = PlanarDiagram::parse_pd(&d.emit_pd()).unwrap();
        assert!(d.isomorphic(&e));
    }

    #[test]
    fn writhe_fixtures() {
        let unknot = PlanarDiagram::parse_pd("").unwrap();
        assert_eq!(unknot.orient().writhe(), 0);
        let pos = PlanarDiagram::parse_pd(POSITIVE_KINK_PD).unwrap();
        assert_eq!(pos.orient().writhe(), 1);
        let neg = PlanarDiagram::parse_pd(NEGATIVE_KINK_PD).unwrap();
        assert_eq!(neg.orient().writhe(), -1);
        let tref = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        assert_eq!(tref.orient().writhe(), -3);
    }

    #[test]
    fn mirror_is_involution_and_flips_writhe() {
        let d = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        let m = d.mirror();
        assert_eq!(m.orient().writhe(), 3);
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn canonical_key_detects_relabelling() {
        // same trefoil with crossings listed in a different order
        let a = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        let b = PlanarDiagram::parse_pd("X[3,6,4,1],X[5,2,6,3],X[1,4,2,5]").unwrap();
        assert!(a.isomorphic(&b));
        let kink = PlanarDiagram::parse_pd(POSITIVE_KINK_PD).unwrap();
        assert!(!a.isomorphic(&kink));
        assert!(!kink.isomorphic(&kink.mirror()));
    }
}
