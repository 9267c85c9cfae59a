//! Generation-stamped mark array.
//!
//! Every set test in the counting passes (intersection source, containment,
//! cover, region membership) marks the vertices of one or more edges and then
//! scans another edge. Bumping the generation invalidates all marks at once,
//! so a test costs O(|e1| + |e2| + ...) regardless of `n`.

#[derive(Debug, Clone)]
pub struct Marker {
    stamp: Vec<u32>,
    bits: Vec<u8>,
    generation: u32,
}

impl Marker {
    pub fn new(n: usize) -> Self {
        Marker {
            stamp: vec![0; n],
            bits: vec![0; n],
            generation: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.stamp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stamp.is_empty()
    }

    /// Forget every mark.
    #[inline]
    pub fn clear(&mut self) {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
    }

    #[inline]
    pub fn set(&mut self, v: u32, bit: u8) {
        let i = v as usize;
        if self.stamp[i] != self.generation {
            self.stamp[i] = self.generation;
            self.bits[i] = bit;
        } else {
            self.bits[i] |= bit;
        }
    }

    /// Mark every vertex of `set` with `bit`.
    #[inline]
    pub fn set_all(&mut self, set: &[u32], bit: u8) {
        for &v in set {
            self.set(v, bit);
        }
    }

    /// Bits currently set on `v` (0 if unmarked).
    #[inline]
    pub fn get(&self, v: u32) -> u8 {
        let i = v as usize;
        if self.stamp[i] == self.generation {
            self.bits[i]
        } else {
            0
        }
    }

    #[inline]
    pub fn has(&self, v: u32, bit: u8) -> bool {
        self.get(v) & bit != 0
    }
}
