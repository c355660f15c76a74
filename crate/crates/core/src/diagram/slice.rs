//! Morse (slice) presentations: a diagram as a sequence of cup, cap and
//! crossing events over a horizontal frontier. This is what makes
//! bounded-width transfer-matrix evaluation of the bracket possible.

use super::{crossing_of, rot, PlanarDiagram, Slot};
use serde::{Deserialize, Serialize};

/// One event of a slice form. Strand positions are 1-based at the moment the
/// event fires.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SliceEvent {
    /// Insert two new adjacent strands at position i (they occupy i, i+1).
    Cup(usize),
    /// Join strands i and i+1.
    Cap(usize),
    /// Cross strands i and i+1; the flag says the left strand goes over.
    Cross(usize, bool),
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct SliceForm {
    pub events: Vec<SliceEvent>,
}

impl SliceForm {
    /// Number of crossing events.
    pub fn crossings(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, SliceEvent::Cross(..)))
            .count()
    }

    /// Maximum number of live strands over the sweep.
    pub fn width(&self) -> usize {
        let mut cur = 0usize;
        let mut max = 0usize;
        for e in &self.events {
            match e {
                SliceEvent::Cup(_) => {
                    cur += 2;
                    max = max.max(cur);
                }
                SliceEvent::Cap(_) => cur -= 2,
                SliceEvent::Cross(..) => {}
            }
        }
        max
    }

    /// Structural validation: indices in bounds, profile starts and ends at
    /// zero strands, and the traced curve is one closed component.
    pub fn validate(&self) -> crate::Result<()> {
        use crate::error::Error;
        // union-find over strand segment ids
        let mut parent: Vec<usize> = Vec::new();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut live: Vec<usize> = Vec::new();
        let mut loops = 0usize;
        for (k, e) in self.events.iter().enumerate() {
            match *e {
                SliceEvent::Cup(i) => {
                    if i == 0 || i > live.len() + 1 {
                        return Err(Error::Other(format!("cup index {i} out of range at {k}")));
                    }
                    let a = parent.len();
                    parent.push(a);
                    parent.push(a + 1);
                    // the two new ends are the same arc
                    parent[a + 1] = a;
                    live.insert(i - 1, a);
                    live.insert(i, a + 1);
                }
                SliceEvent::Cap(i) => {
                    if i == 0 || i + 1 > live.len() {
                        return Err(Error::Other(format!("cap index {i} out of range at {k}")));
                    }
                    let a = live.remove(i - 1);
                    let b = live.remove(i - 1);
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra == rb {
                        loops += 1;
                    } else {
                        parent[ra] = rb;
                    }
                }
                SliceEvent::Cross(i, _) => {
                    if i == 0 || i + 1 > live.len() {
                        return Err(Error::Other(format!("cross index {i} out of range at {k}")));
                    }
                    live.swap(i - 1, i);
                }
            }
        }
        if !live.is_empty() {
            return Err(Error::Other(format!(
                "slice form leaves {} strands open",
                live.len()
            )));
        }
        if loops != 1 {
            return Err(Error::Other(format!(
                "slice form traces {loops} components, expected 1"
            )));
        }
        Ok(())
    }
}

/// A pending frontier stub: the partially drawn edge attached at `attached`,
/// heading for `pairing(attached)`.
#[derive(Clone, Copy, Debug)]
struct Pend {
    attached: Slot,
}

/// Compile a diagram into a slice form.
///
/// The sweep grows a disk around the drawn part of the diagram. Adjacent
/// frontier stubs belonging to the same edge are capped eagerly; otherwise
/// the next crossing is drawn at a stub, chosen greedily over a
/// breadth-first layout of the map with smallest-crossing-index tie breaks.
pub fn to_slice_form(d: &PlanarDiagram) -> SliceForm {
    let mut events = Vec::new();
    if d.is_unknot() {
        events.push(SliceEvent::Cup(1));
        events.push(SliceEvent::Cap(1));
        return SliceForm { events };
    }

    let n = d.crossings();
    // breadth-first layers over crossing adjacency
    let mut layer = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    layer[0] = 0;
    queue.push_back(0usize);
    while let Some(c) = queue.pop_front() {
        for p in 0..4u32 {
            let c2 = crossing_of(d.pairing(4 * c as u32 + p));
            if layer[c2] == usize::MAX {
                layer[c2] = layer[c] + 1;
                queue.push_back(c2);
            }
        }
    }

    let mut drawn = vec![false; n];
    let mut pends: Vec<Pend> = Vec::new();

    // left strand of a crossing event is over iff its diagonal is the
    // over-strand; the head/left strand runs through `s` and `opp(s)`.
    let left_over = |s: Slot| d.is_over_slot(s);

    // Draw crossing 0 on the empty frontier: nested cups, cross the inner
    // legs. Entering virtually at slot 0, the frontier reads
    // [stub3, stub2, stub1, stub0].
    events.push(SliceEvent::Cup(1));
    events.push(SliceEvent::Cup(2));
    events.push(SliceEvent::Cross(1, left_over(0)));
    drawn[0] = true;
    for p in [3u32, 2, 1, 0] {
        pends.push(Pend { attached: p });
    }

    loop {
        // cap every adjacent matching pair, leftmost first
        let mut capped = true;
        while capped {
            capped = false;
            let mut i = 0;
            while i + 1 < pends.len() {
                if d.pairing(pends[i].attached) == pends[i + 1].attached {
                    events.push(SliceEvent::Cap(i + 1));
                    pends.drain(i..i + 2);
                    capped = true;
                } else {
                    i += 1;
                }
            }
        }
        if pends.is_empty() {
            break;
        }
        // choose a stub whose target crossing is undrawn
        let mut best: Option<(usize, usize, usize)> = None; // (layer, crossing, position)
        for (i, p) in pends.iter().enumerate() {
            let target = d.pairing(p.attached);
            let c = crossing_of(target);
            if !drawn[c] {
                let key = (layer[c], c, i);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
        let (_, _, i) = best.expect("no cap and no undrawn target: impossible for a planar knot");
        let y = d.pairing(pends[i].attached); // entering slot at the new crossing
        let c = crossing_of(y);
        events.push(SliceEvent::Cup(i + 2));
        events.push(SliceEvent::Cross(i + 1, left_over(y)));
        drawn[c] = true;
        pends[i] = Pend { attached: rot(y, 3) };
        pends.insert(i + 1, Pend { attached: rot(y, 2) });
        pends.insert(i + 2, Pend { attached: rot(y, 1) });
    }

    debug_assert_eq!(
        events.iter().filter(|e| matches!(e, SliceEvent::Cross(..))).count(),
        n
    );
    SliceForm { events }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{NEGATIVE_KINK_PD, POSITIVE_KINK_PD, TREFOIL_PD};

    #[test]
    fn unknot_slice() {
        let d = PlanarDiagram::unknot();
        let s = to_slice_form(&d);
        assert_eq!(s.events, vec![SliceEvent::Cup(1), SliceEvent::Cap(1)]);
        s.validate().unwrap();
    }

    #[test]
    fn kink_slices_validate() {
        for pd in [POSITIVE_KINK_PD, NEGATIVE_KINK_PD] {
            let d = PlanarDiagram::parse_pd(pd).unwrap();
            let s = to_slice_form(&d);
            assert_eq!(s.crossings(), 1);
            s.validate().unwrap();
        }
    }

    #[test]
    fn trefoil_slice_validates() {
        let d = PlanarDiagram::parse_pd(TREFOIL_PD).unwrap();
        let s = to_slice_form(&d);
        assert_eq!(s.crossings(), 3);
        s.validate().unwrap();
        assert!(s.width() >= 2);
    }
}
