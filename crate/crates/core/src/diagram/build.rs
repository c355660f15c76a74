//! Port-based construction of planar maps.
//!
//! Template assembly (grids, knotholder layouts, meander normal forms) reads
//! most naturally in compass terms: each crossing is created with North,
//! East, South, West ports and a flag telling which of the two transversal
//! strands runs on top. Ports map to rotation slots as S=0, E=1, N=2, W=3,
//! which is counterclockwise in standard plane orientation.

use super::{PlanarDiagram, Slot};
use crate::Result;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Port {
    South = 0,
    East = 1,
    North = 2,
    West = 3,
}

pub use Port::{East, North, South, West};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PortRef {
    pub crossing: usize,
    pub port: Port,
}

pub struct DiagramBuilder {
    /// per crossing: true when the East-West strand is the over-strand
    over_ew: Vec<bool>,
    links: Vec<Option<Slot>>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        DiagramBuilder {
            over_ew: Vec::new(),
            links: Vec::new(),
        }
    }

    /// Add a crossing; `over_ew` puts the East-West strand on top.
    pub fn crossing(&mut self, over_ew: bool) -> usize {
        let id = self.over_ew.len();
        self.over_ew.push(over_ew);
        self.links.extend([None, None, None, None]);
        id
    }

    pub fn port(&self, c: usize, port: Port) -> PortRef {
        debug_assert!(c < self.over_ew.len());
        PortRef { crossing: c, port }
    }

    fn slot(&self, p: PortRef) -> Slot {
        (4 * p.crossing + p.port as usize) as Slot
    }

    /// Connect two ports with an edge.
    pub fn connect(&mut self, a: PortRef, b: PortRef) {
        let (sa, sb) = (self.slot(a), self.slot(b));
        assert!(
            self.links[sa as usize].is_none() && self.links[sb as usize].is_none(),
            "port already connected: {a:?} or {b:?}"
        );
        assert_ne!(sa, sb, "cannot connect a port to itself");
        self.links[sa as usize] = Some(sb);
        self.links[sb as usize] = Some(sa);
    }

    /// Finish, validating planarity and connectedness.
    pub fn build(self) -> Result<PlanarDiagram> {
        let pairing: Vec<Slot> = self
            .links
            .iter()
            .enumerate()
            .map(|(s, l)| l.unwrap_or_else(|| panic!("unconnected port at slot {s}")))
            .collect();
        PlanarDiagram::from_parts(pairing, self.over_ew)
    }
}

impl Default for DiagramBuilder {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_positive_kink() {
        // strand from the west goes through, loops over the north-east
        let mut b = DiagramBuilder::new();
        let c = b.crossing(false);
        b.connect(b.port(c, North), b.port(c, East));
        b.connect(b.port(c, South), b.port(c, West));
        let d = b.build().unwrap();
        assert_eq!(d.crossings(), 1);
        assert_eq!(d.faces().len(), 3);
    }

    #[test]
    fn build_trefoil_matches_pd_fixture() {
        // standard closed 2-braid style construction of a trefoil: three
        // bigon-stacked crossings, all with the same over parity.
        let mut b = DiagramBuilder::new();
        let c0 = b.crossing(true);
        let c1 = b.crossing(true);
        let c2 = b.crossing(true);
        for (x, y) in [(c0, c1), (c1, c2), (c2, c0)] {
            b.connect(b.port(x, North), b.port(y, West));
            b.connect(b.port(x, East), b.port(y, South));
        }
        let d = b.build().unwrap();
        assert_eq!(d.crossings(), 3);
        assert_eq!(d.faces().len(), 5);
    }
}
