/// Size limits shared by the enumerating builders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of candidate words (or factorizations) a trace
    /// enumeration may visit.
    pub enumeration: u64,
    /// Maximum number of morphisms in a constructed finite category.
    pub max_morphisms: usize,
    /// Maximum number of nondegenerate simplices (or cochain indices) per degree.
    pub max_simplices: usize,
}

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 2_000_000;
pub const DEFAULT_MAX_MORPHISMS: usize = 20_000;
pub const DEFAULT_MAX_SIMPLICES: usize = 2_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: DEFAULT_ENUMERATION_BUDGET,
            max_morphisms: DEFAULT_MAX_MORPHISMS,
            max_simplices: DEFAULT_MAX_SIMPLICES,
        }
    }
}

impl Limits {
    pub fn with_enumeration(mut self, budget: u64) -> Self {
        self.enumeration = budget;
        self
    }
}
