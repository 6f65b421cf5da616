//! Prefix-count structure used by [`crate::delta_fast`].

/// Binary indexed tree over `0..len` counting inserted values.
#[derive(Debug, Clone)]
pub struct RankCounter {
    tree: Vec<u32>,
}

impl RankCounter {
    pub fn new(len: usize) -> Self {
        RankCounter { tree: vec![0; len + 1] }
    }

    pub fn len(&self) -> usize {
        self.tree.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn insert(&mut self, value: usize) {
        debug_assert!(value < self.len());
        let mut i = value + 1;
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Number of inserted values strictly below `value`.
    pub fn count_below(&self, value: usize) -> u32 {
        let mut i = value.min(self.len());
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i &= i - 1;
        }
        sum
    }
}
