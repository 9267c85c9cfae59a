//! Region signatures of edge triples and the 26-class pattern taxonomy.
//!
//! Three edges split their union into seven Venn regions, indexed here by
//! membership mask `m` in `1..=7` (bit 0: first edge, bit 1: second, bit 2:
//! third). A [`RegionSignature`] records which regions are non-empty.
//!
//! The mapping from signatures to pattern ids is not hand-written: every
//! one of the 128 signatures is enumerated, invalid ones are discarded, the
//! rest are grouped up to relabeling of the three edges and each class is
//! given an id from its structural family (containments, red/blue/green
//! region counts).

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph};
use crate::scratch::Marker;

/// Membership masks of the named regions.
pub mod region {
    pub const GREEN_A: u8 = 0b001;
    pub const GREEN_B: u8 = 0b010;
    pub const GREEN_C: u8 = 0b100;
    pub const BLUE_AB: u8 = 0b011;
    pub const BLUE_AC: u8 = 0b101;
    pub const BLUE_BC: u8 = 0b110;
    pub const RED: u8 = 0b111;

    pub const GREENS: [u8; 3] = [GREEN_A, GREEN_B, GREEN_C];
    pub const BLUES: [u8; 3] = [BLUE_AB, BLUE_AC, BLUE_BC];
    /// Display order: gA, gB, gC, bAB, bAC, bBC, red.
    pub const DISPLAY: [u8; 7] = [GREEN_A, GREEN_B, GREEN_C, BLUE_AB, BLUE_AC, BLUE_BC, RED];
}

/// The six relabelings of three edges, as images of edge 0, 1, 2.
const PERMUTATIONS: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Emptiness flags of the seven regions; bit `m - 1` is set when region `m`
/// is non-empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RegionSignature(u8);

impl RegionSignature {
    pub const fn from_bits(bits: u8) -> Self {
        RegionSignature(bits & 0x7f)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// Build from flags in display order gA, gB, gC, bAB, bAC, bBC, red.
    pub fn from_flags(flags: [bool; 7]) -> Self {
        let mut sig = RegionSignature(0);
        for (flag, mask) in flags.into_iter().zip(region::DISPLAY) {
            if flag {
                sig.insert(mask);
            }
        }
        sig
    }

    pub fn flags(self) -> [bool; 7] {
        region::DISPLAY.map(|m| self.has(m))
    }

    #[inline]
    pub fn has(self, mask: u8) -> bool {
        self.0 & (1 << (mask - 1)) != 0
    }

    #[inline]
    pub fn insert(&mut self, mask: u8) {
        self.0 |= 1 << (mask - 1);
    }

    pub fn greens(self) -> usize {
        region::GREENS.iter().filter(|&&m| self.has(m)).count()
    }

    pub fn blues(self) -> usize {
        region::BLUES.iter().filter(|&&m| self.has(m)).count()
    }

    pub fn red(self) -> bool {
        self.has(region::RED)
    }

    fn regions(self) -> impl Iterator<Item = u8> {
        (1..=7u8).filter(move |&m| self.has(m))
    }

    /// Edge `i` has at least one vertex.
    fn edge_nonempty(self, i: usize) -> bool {
        self.regions().any(|m| m & (1 << i) != 0)
    }

    fn intersects(self, i: usize, j: usize) -> bool {
        let both = (1 << i) | (1 << j);
        self.regions().any(|m| m & both == both)
    }

    /// Edge `i` is a subset of edge `j`.
    fn subset(self, i: usize, j: usize) -> bool {
        !self.regions().any(|m| m & (1 << i) != 0 && m & (1 << j) == 0)
    }

    /// Edges `i` and `j` are forced to be the same set.
    fn forced_equal(self, i: usize, j: usize) -> bool {
        self.subset(i, j) && self.subset(j, i)
    }

    /// Signature after relabeling edge `k` as edge `perm[k]`.
    fn permuted(self, perm: [u8; 3]) -> Self {
        let mut out = RegionSignature(0);
        for m in self.regions() {
            let mut image = 0u8;
            for (k, &to) in perm.iter().enumerate() {
                if m & (1 << k) != 0 {
                    image |= 1 << to;
                }
            }
            out.insert(image);
        }
        out
    }

    /// Smallest signature in the orbit under relabeling.
    pub fn canonical(self) -> Self {
        PERMUTATIONS.iter().map(|&p| self.permuted(p)).min().unwrap()
    }
}

impl fmt::Debug for RegionSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegionSignature({self})")
    }
}

impl fmt::Display for RegionSignature {
    /// Flags in display order, e.g. `gA=0 gB=1 ...` compacted to `0100011`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for flag in self.flags() {
            f.write_str(if flag { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Pattern id in `1..=26`; `1..=20` are closed (hypertriangles), `21..=26` open.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternId(u8);

impl PatternId {
    pub const COUNT: usize = 26;

    pub fn new(id: u8) -> Result<Self> {
        if (1..=26).contains(&id) {
            Ok(PatternId(id))
        } else {
            Err(Error::domain(format!("pattern id {id} outside 1..=26")))
        }
    }

    pub const fn get(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub const fn is_closed(self) -> bool {
        self.0 <= 20
    }

    pub fn all() -> impl Iterator<Item = PatternId> {
        (1..=26).map(PatternId)
    }

    /// Patterns counted by the triangle pass and for which a witness exists.
    pub const fn has_witness(self) -> bool {
        matches!(self.0, 4 | 5 | 7 | 8 | 11..=20)
    }
}

impl fmt::Debug for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Structural family of a pattern class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// e1 ⊂ e2 ⊂ e3.
    Chain,
    /// One edge contained in both others.
    ContainedInTwo,
    /// Two intersecting edges inside a common third.
    TwoChildrenIntersecting,
    /// Exactly one containment; the third edge meets the pair.
    SingleContainment,
    /// Common vertex, no blue region.
    RedNoBlue,
    RedOneBlue,
    RedTwoBlue,
    RedThreeBlue,
    ThreeBlueNoRed,
    OpenBothChildrenCovering,
    OpenBothChildren,
    OpenOneChildCovering,
    OpenOneChild,
    OpenNoChildCovering,
    OpenNoChild,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::Chain,
        Family::ContainedInTwo,
        Family::TwoChildrenIntersecting,
        Family::SingleContainment,
        Family::RedNoBlue,
        Family::RedOneBlue,
        Family::RedTwoBlue,
        Family::RedThreeBlue,
        Family::ThreeBlueNoRed,
        Family::OpenBothChildrenCovering,
        Family::OpenBothChildren,
        Family::OpenOneChildCovering,
        Family::OpenOneChild,
        Family::OpenNoChildCovering,
        Family::OpenNoChild,
    ];

    /// Number of classes the enumeration must produce for this family.
    pub const fn expected_size(self) -> usize {
        match self {
            Family::Chain => 1,
            Family::ContainedInTwo => 2,
            Family::TwoChildrenIntersecting => 2,
            Family::SingleContainment => 3,
            Family::RedNoBlue => 1,
            Family::RedOneBlue => 1,
            Family::RedTwoBlue => 2,
            Family::RedThreeBlue => 4,
            Family::ThreeBlueNoRed => 4,
            _ => 1,
        }
    }

    pub const fn is_closed(self) -> bool {
        (self as u8) < (Family::OpenBothChildrenCovering as u8)
    }

    pub const fn label(self) -> &'static str {
        match self {
            Family::Chain => "containment chain",
            Family::ContainedInTwo => "contained in two",
            Family::TwoChildrenIntersecting => "two children intersecting",
            Family::SingleContainment => "single containment",
            Family::RedNoBlue => "star",
            Family::RedOneBlue => "red + one blue",
            Family::RedTwoBlue => "red + two blue",
            Family::RedThreeBlue => "red + three blue",
            Family::ThreeBlueNoRed => "three blue, no red",
            Family::OpenBothChildrenCovering => "open: two children, covering",
            Family::OpenBothChildren => "open: two children",
            Family::OpenOneChildCovering => "open: one child, covering",
            Family::OpenOneChild => "open: one child",
            Family::OpenNoChildCovering => "open: no child, covering",
            Family::OpenNoChild => "open: no child",
        }
    }
}

/// Why a valid triple of edges is not one of the 26 patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotAPattern {
    /// At most one pair of edges intersects.
    Disconnected,
    /// The signature forces two of the edges to be the same set.
    DuplicateEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Pattern(PatternId),
    NotAPattern(NotAPattern),
}

impl Classification {
    pub fn pattern(self) -> Option<PatternId> {
        match self {
            Classification::Pattern(p) => Some(p),
            Classification::NotAPattern(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PatternClass {
    pub id: PatternId,
    pub family: Family,
    /// Smallest member signature.
    pub canonical: RegionSignature,
    /// All signatures in the class (the orbit under relabeling).
    pub members: Vec<RegionSignature>,
}

#[derive(Debug, Clone, Copy)]
enum Entry {
    EmptyEdge,
    Not(NotAPattern),
    Pattern(PatternId),
}

#[derive(Debug, Clone)]
pub struct PatternTable {
    lookup: [Entry; 128],
    classes: Vec<PatternClass>,
}

/// Structural family of a valid, connected signature.
fn family_of(sig: RegionSignature) -> Family {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let intersecting = pairs.iter().filter(|&&(i, j)| sig.intersects(i, j)).count();
    if intersecting == 2 {
        let middle = (0..3)
            .find(|&i| (0..3).filter(|&j| j != i).all(|j| sig.intersects(i, j)))
            .expect("two intersecting pairs share an edge");
        let children = (0..3).filter(|&j| j != middle && sig.subset(j, middle)).count();
        let covering = !sig.has(1 << middle);
        return match (children, covering) {
            (2, true) => Family::OpenBothChildrenCovering,
            (2, false) => Family::OpenBothChildren,
            (1, true) => Family::OpenOneChildCovering,
            (1, false) => Family::OpenOneChild,
            (_, true) => Family::OpenNoChildCovering,
            (_, false) => Family::OpenNoChild,
        };
    }

    let containments: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && sig.subset(i, j))
        .collect();
    match containments.len() {
        3 => Family::Chain,
        2 if containments[0].0 == containments[1].0 => Family::ContainedInTwo,
        2 => Family::TwoChildrenIntersecting,
        1 => Family::SingleContainment,
        _ => match (sig.red(), sig.blues()) {
            (true, 0) => Family::RedNoBlue,
            (true, 1) => Family::RedOneBlue,
            (true, 2) => Family::RedTwoBlue,
            (true, _) => Family::RedThreeBlue,
            (false, _) => Family::ThreeBlueNoRed,
        },
    }
}

fn validate(sig: RegionSignature) -> Entry {
    if !(0..3).all(|i| sig.edge_nonempty(i)) {
        return Entry::EmptyEdge;
    }
    if [(0, 1), (0, 2), (1, 2)].iter().any(|&(i, j)| sig.forced_equal(i, j)) {
        return Entry::Not(NotAPattern::DuplicateEdges);
    }
    let intersecting = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .filter(|&&(i, j)| sig.intersects(i, j))
        .count();
    if intersecting < 2 {
        return Entry::Not(NotAPattern::Disconnected);
    }
    Entry::Pattern(PatternId(0))
}

/// Enumerate all signatures and derive the 26 pattern classes.
///
/// Ids are assigned family by family (in [`Family::ALL`] order); within a
/// family, classes with fewer blue regions come first, then fewer green.
pub fn generate_pattern_table() -> Result<PatternTable> {
    let mut lookup = [Entry::EmptyEdge; 128];
    let mut canon_of = [RegionSignature(0); 128];
    let mut canonicals: Vec<RegionSignature> = Vec::new();
    for bits in 0..128u8 {
        let sig = RegionSignature(bits);
        let entry = validate(sig);
        lookup[bits as usize] = entry;
        if let Entry::Pattern(_) = entry {
            let c = sig.canonical();
            canon_of[bits as usize] = c;
            if !canonicals.contains(&c) {
                canonicals.push(c);
            }
        }
    }

    let mut classes = Vec::new();
    let mut next_id = 1u8;
    for family in Family::ALL {
        let mut members: Vec<RegionSignature> = canonicals
            .iter()
            .copied()
            .filter(|&c| family_of(c) == family)
            .collect();
        if members.len() != family.expected_size() {
            return Err(Error::PatternTable(format!(
                "family {:?} has {} classes, expected {}",
                family,
                members.len(),
                family.expected_size()
            )));
        }
        members.sort_by_key(|&c| (c.blues(), c.greens(), c));
        for canonical in members {
            let id = PatternId(next_id);
            next_id += 1;
            let orbit: Vec<RegionSignature> = (0..128u8)
                .map(RegionSignature)
                .filter(|&s| matches!(lookup[s.0 as usize], Entry::Pattern(_)) && canon_of[s.0 as usize] == canonical)
                .collect();
            classes.push(PatternClass {
                id,
                family,
                canonical,
                members: orbit,
            });
        }
    }

    let closed = classes.iter().filter(|c| c.family.is_closed()).count();
    let open = classes.len() - closed;
    if closed != 20 || open != 6 || canonicals.len() != 26 {
        return Err(Error::PatternTable(format!(
            "enumeration produced {closed} closed and {open} open classes ({} total)",
            canonicals.len()
        )));
    }
    for class in &classes {
        for s in &class.members {
            lookup[s.0 as usize] = Entry::Pattern(class.id);
        }
    }
    Ok(PatternTable { lookup, classes })
}

impl PatternTable {
    /// The process-wide table, generated on first use.
    ///
    /// Panics if generation fails: the taxonomy is a fixed mathematical object
    /// and a mismatch can only come from a bug in the enumeration.
    pub fn global() -> &'static PatternTable {
        static TABLE: OnceLock<PatternTable> = OnceLock::new();
        TABLE.get_or_init(|| generate_pattern_table().expect("pattern taxonomy is consistent"))
    }

    pub fn classes(&self) -> &[PatternClass] {
        &self.classes
    }

    pub fn class(&self, id: PatternId) -> &PatternClass {
        &self.classes[id.index()]
    }

    pub fn family(&self, id: PatternId) -> Family {
        self.class(id).family
    }

    /// Pattern of a signature. Errors if the signature leaves an edge empty.
    pub fn classify(&self, sig: RegionSignature) -> Result<Classification> {
        match self.lookup[sig.0 as usize] {
            Entry::EmptyEdge => Err(Error::consistency(format!(
                "signature {sig} leaves an edge without vertices"
            ))),
            Entry::Not(reason) => Ok(Classification::NotAPattern(reason)),
            Entry::Pattern(id) => Ok(Classification::Pattern(id)),
        }
    }

    /// Pattern of a signature, `None` when it is not one of the 26.
    #[inline]
    pub fn pattern(&self, sig: RegionSignature) -> Option<PatternId> {
        match self.lookup[sig.0 as usize] {
            Entry::Pattern(id) => Some(id),
            _ => None,
        }
    }
}

/// Classify a signature with the global table.
pub fn classify(sig: RegionSignature) -> Result<Classification> {
    PatternTable::global().classify(sig)
}

/// Region signature plus the smallest vertex of every non-empty region.
#[derive(Debug, Clone, Copy)]
pub struct RegionScan {
    pub signature: RegionSignature,
    first: [u32; 8],
}

impl RegionScan {
    /// Smallest vertex of region `mask`, if non-empty.
    pub fn first(&self, mask: u8) -> Option<u32> {
        self.signature.has(mask).then(|| self.first[mask as usize])
    }
}

/// Mark-and-scan over three vertex lists. Smallest-vertex tracking assumes
/// nothing about list order, so any id space works; in rank space the
/// smallest vertex of a region is its source.
#[inline]
pub fn scan_regions(a: &[u32], b: &[u32], c: &[u32], marker: &mut Marker) -> RegionScan {
    marker.clear();
    marker.set_all(a, 1);
    marker.set_all(b, 2);
    marker.set_all(c, 4);
    let mut sig = RegionSignature(0);
    let mut first = [u32::MAX; 8];
    for list in [a, b, c] {
        for &v in list {
            let m = marker.get(v);
            sig.0 |= 1 << (m - 1);
            let slot = &mut first[m as usize];
            if v < *slot {
                *slot = v;
            }
        }
    }
    RegionScan {
        signature: sig,
        first,
    }
}

/// Signature of three vertex lists.
#[inline]
pub fn signature_of(a: &[u32], b: &[u32], c: &[u32], marker: &mut Marker) -> RegionSignature {
    scan_regions(a, b, c, marker).signature
}

/// Signature of three distinct edges of `g`.
pub fn region_signature(
    g: &Hypergraph,
    e1: EdgeId,
    e2: EdgeId,
    e3: EdgeId,
    marker: &mut Marker,
) -> Result<RegionSignature> {
    if e1 == e2 || e1 == e3 || e2 == e3 {
        return Err(Error::domain(format!("repeated edge in triple ({e1}, {e2}, {e3})")));
    }
    for e in [e1, e2, e3] {
        if e as usize >= g.m() {
            return Err(Error::domain(format!("edge {e} out of range (m = {})", g.m())));
        }
    }
    Ok(signature_of(g.edge(e1), g.edge(e2), g.edge(e3), marker))
}

/// Sorted vertex triple that identifies a triangle-based pattern instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness(pub [u32; 3]);

/// Witness of a scanned triple of pattern `pattern`.
///
/// For three blue regions (13–20) it is the smallest vertex of each blue
/// region; for red plus two blue regions (4, 5, 7, 8, 11, 12) the smallest
/// vertex of the red region and of each non-empty blue region.
pub fn witness(scan: &RegionScan, pattern: PatternId) -> Result<Witness> {
    if !pattern.has_witness() {
        return Err(Error::domain(format!("pattern {pattern} has no witness")));
    }
    let mut w = [0u32; 3];
    if pattern.get() >= 13 {
        for (slot, mask) in w.iter_mut().zip(region::BLUES) {
            *slot = scan.first(mask).ok_or_else(|| {
                Error::consistency(format!("pattern {pattern} with empty blue region"))
            })?;
        }
    } else {
        w[0] = scan
            .first(region::RED)
            .ok_or_else(|| Error::consistency(format!("pattern {pattern} with empty red region")))?;
        let blues: Vec<u32> = region::BLUES.iter().filter_map(|&m| scan.first(m)).collect();
        if blues.len() != 2 {
            return Err(Error::consistency(format!(
                "pattern {pattern} with {} blue regions",
                blues.len()
            )));
        }
        w[1] = blues[0];
        w[2] = blues[1];
    }
    w.sort_unstable();
    Ok(Witness(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use region::*;

    fn sig(masks: &[u8]) -> RegionSignature {
        let mut s = RegionSignature::default();
        for &m in masks {
            s.insert(m);
        }
        s
    }

    fn table() -> &'static PatternTable {
        PatternTable::global()
    }

    fn id(n: u8) -> PatternId {
        PatternId::new(n).unwrap()
    }

    #[test]
    fn triangle_signature() {
        let mut marker = Marker::new(3);
        let s = signature_of(&[0, 1], &[1, 2], &[0, 2], &mut marker);
        assert_eq!(s, sig(&[BLUE_AB, BLUE_AC, BLUE_BC]));
        assert_eq!(s.greens(), 0);
        assert!(!s.red());
    }

    #[test]
    fn star_signature() {
        let mut marker = Marker::new(4);
        let s = signature_of(&[0, 1], &[0, 2], &[0, 3], &mut marker);
        assert_eq!(s, sig(&[RED, GREEN_A, GREEN_B, GREEN_C]));
    }

    #[test]
    fn chain_signature() {
        let mut marker = Marker::new(4);
        let s = signature_of(&[0, 1], &[0, 1, 2], &[0, 1, 2, 3], &mut marker);
        assert_eq!(s, sig(&[RED, BLUE_BC, GREEN_C]));
    }

    #[test]
    fn pinned_closed_ids() {
        let t = table();
        let check = |masks: &[u8], want: u8| {
            assert_eq!(t.pattern(sig(masks)), Some(id(want)), "signature {:?}", masks);
        };
        check(&[BLUE_AB, BLUE_AC, BLUE_BC], 17);
        check(&[RED, GREEN_A, GREEN_B, GREEN_C], 9);
        check(&[RED, BLUE_BC, GREEN_C], 1);
        // Two intersecting children {1,2}, {2,3} of {1,2,3}.
        check(&[RED, BLUE_AC, BLUE_BC], 4);
        check(&[RED, BLUE_AC, BLUE_BC, GREEN_C], 5);
        // {1,2} inside {1,2,3} and {1,2,4}.
        check(&[RED, GREEN_B, GREEN_C], 2);
        check(&[RED, GREEN_B, GREEN_C, BLUE_BC], 3);
        // e1 ⊂ e3, e2 meets e1 only in the red region.
        check(&[RED, BLUE_AC, GREEN_B, GREEN_C], 6);
        check(&[RED, BLUE_AC, BLUE_BC, GREEN_B], 7);
        check(&[RED, BLUE_AC, BLUE_BC, GREEN_B, GREEN_C], 8);
        check(&[RED, BLUE_AB, GREEN_A, GREEN_B, GREEN_C], 10);
        check(&[RED, BLUE_AC, BLUE_BC, GREEN_A, GREEN_B], 11);
        check(&[RED, BLUE_AC, BLUE_BC, GREEN_A, GREEN_B, GREEN_C], 12);
        check(&[RED, BLUE_AB, BLUE_AC, BLUE_BC], 13);
        check(&[RED, BLUE_AB, BLUE_AC, BLUE_BC, GREEN_A, GREEN_B, GREEN_C], 16);
        check(&[BLUE_AB, BLUE_AC, BLUE_BC, GREEN_A], 18);
        check(&[BLUE_AB, BLUE_AC, BLUE_BC, GREEN_A, GREEN_B, GREEN_C], 20);
    }

    #[test]
    fn pinned_open_ids() {
        // e1 is the middle edge; e2 ∩ e3 = ∅.
        let t = table();
        let base = [BLUE_AB, BLUE_AC];
        let with = |extra: &[u8]| {
            let mut v = base.to_vec();
            v.extend_from_slice(extra);
            t.pattern(sig(&v))
        };
        assert_eq!(with(&[]), Some(id(21)));
        assert_eq!(with(&[GREEN_A]), Some(id(22)));
        assert_eq!(with(&[GREEN_C]), Some(id(23)));
        assert_eq!(with(&[GREEN_A, GREEN_C]), Some(id(24)));
        assert_eq!(with(&[GREEN_B, GREEN_C]), Some(id(25)));
        assert_eq!(with(&[GREEN_A, GREEN_B, GREEN_C]), Some(id(26)));
    }

    #[test]
    fn family_sizes_and_ranges() {
        let t = table();
        assert_eq!(t.classes().len(), 26);
        assert_eq!(t.classes().iter().filter(|c| c.id.is_closed()).count(), 20);
        for family in Family::ALL {
            let n = t.classes().iter().filter(|c| c.family == family).count();
            assert_eq!(n, family.expected_size(), "{family:?}");
            assert_eq!(family.is_closed(), t.classes().iter().find(|c| c.family == family).unwrap().id.is_closed());
        }
        let sizes: Vec<usize> = Family::ALL[..9].iter().map(|f| f.expected_size()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 3, 1, 1, 2, 4, 4]);
    }

    #[test]
    fn disconnected_and_duplicate_triples() {
        let t = table();
        // Three pairwise disjoint edges.
        assert_eq!(
            t.classify(sig(&[GREEN_A, GREEN_B, GREEN_C])).unwrap(),
            Classification::NotAPattern(NotAPattern::Disconnected)
        );
        // e1 and e2 intersect, e3 apart.
        assert_eq!(
            t.classify(sig(&[BLUE_AB, GREEN_A, GREEN_B, GREEN_C])).unwrap(),
            Classification::NotAPattern(NotAPattern::Disconnected)
        );
        // e1 = e2 forced; checked before connectivity.
        assert_eq!(
            t.classify(sig(&[BLUE_AB, GREEN_C])).unwrap(),
            Classification::NotAPattern(NotAPattern::DuplicateEdges)
        );
        assert_eq!(
            t.classify(sig(&[BLUE_AB, GREEN_C, RED])).unwrap(),
            Classification::NotAPattern(NotAPattern::DuplicateEdges)
        );
        // e3 empty.
        assert!(matches!(t.classify(sig(&[BLUE_AB, GREEN_A])), Err(Error::Consistency(_))));
    }

    #[test]
    fn classification_is_invariant_under_relabeling() {
        let t = table();
        for bits in 0..128u8 {
            let s = RegionSignature(bits);
            let base = t.classify(s).ok();
            for p in PERMUTATIONS {
                assert_eq!(t.classify(s.permuted(p)).ok(), base, "{s} under {p:?}");
            }
        }
    }

    #[test]
    fn structural_predicates_match_families() {
        let t = table();
        for class in t.classes() {
            for &s in &class.members {
                let pairs = [(0, 1), (0, 2), (1, 2)];
                let inter = pairs.iter().filter(|&&(i, j)| s.intersects(i, j)).count();
                assert_eq!(inter == 3, class.id.is_closed());
                let contains = (0..3)
                    .flat_map(|i| (0..3).map(move |j| (i, j)))
                    .filter(|&(i, j)| i != j && s.subset(i, j))
                    .count();
                match class.family {
                    Family::Chain => assert_eq!(contains, 3),
                    Family::ContainedInTwo | Family::TwoChildrenIntersecting => assert_eq!(contains, 2),
                    Family::SingleContainment => assert_eq!(contains, 1),
                    Family::RedNoBlue
                    | Family::RedOneBlue
                    | Family::RedTwoBlue
                    | Family::RedThreeBlue => {
                        assert_eq!(contains, 0);
                        assert!(s.red());
                    }
                    Family::ThreeBlueNoRed => {
                        assert!(!s.red());
                        assert_eq!(s.blues(), 3);
                    }
                    _ => assert_eq!(inter, 2),
                }
            }
        }
    }

    #[test]
    fn witness_of_triangle() {
        let mut marker = Marker::new(3);
        let scan = scan_regions(&[0, 1], &[1, 2], &[0, 2], &mut marker);
        let w = witness(&scan, table().pattern(scan.signature).unwrap()).unwrap();
        assert_eq!(w, Witness([0, 1, 2]));
    }

    #[test]
    fn witness_of_two_children() {
        // {1,2,3} ⊇ {1,2}, {2,3}: red {2}, blues {1} and {3} (ids shifted by one).
        let mut marker = Marker::new(3);
        let scan = scan_regions(&[0, 1, 2], &[0, 1], &[1, 2], &mut marker);
        let p = table().pattern(scan.signature).unwrap();
        assert!(p == id(4) || p == id(5));
        assert_eq!(scan.first(RED), Some(1));
        assert_eq!(witness(&scan, p).unwrap(), Witness([0, 1, 2]));
    }

    #[test]
    fn witness_outside_domain() {
        let mut marker = Marker::new(4);
        let scan = scan_regions(&[0, 1], &[0, 2], &[0, 3], &mut marker);
        assert!(matches!(witness(&scan, id(9)), Err(Error::Domain(_))));
    }

    #[test]
    fn region_signature_rejects_repeated_edges() {
        let g = crate::hypergraph::parse_str("1 2\n2 3\n1 3\n").unwrap().0;
        let mut marker = Marker::new(g.n());
        assert!(region_signature(&g, 0, 0, 1, &mut marker).is_err());
        assert!(region_signature(&g, 0, 1, 7, &mut marker).is_err());
        let s = region_signature(&g, 0, 1, 2, &mut marker).unwrap();
        assert_eq!(classify(s).unwrap(), Classification::Pattern(id(17)));
    }
}
