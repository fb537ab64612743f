use std::collections::HashSet;

use crate::numeration::Digit;

/// Number of distinct length-`l` factors of `prefix` (0 when `l > prefix.len()`).
pub fn complexity_count(prefix: &[Digit], l: usize) -> usize {
    if l == 0 {
        return 1;
    }
    prefix.windows(l).collect::<HashSet<_>>().len()
}
