use serde::Serialize;

use super::{LElement, Subgroup, WeightType};

/// Permutation-isomorphism class of a pair `(p, H)`: the sorted weights and
/// the lexicographically least sorted image of H's elements over all
/// relabelings that sort the weights.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct CanonicalKey {
    pub weights: WeightType,
    pub elements: Vec<LElement>,
}

impl CanonicalKey {
    /// The subgroup of L(sorted p) that the key describes.
    pub fn subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_elements(&self.weights, Vec::new(), self.elements.clone())
            .with_small_generators()
    }
}

/// Canonical key of `(p, H)` under index permutations that send `p` to its
/// sorted form. Only indices carrying equal weights are exchanged.
pub fn permutation_canonical(p: &WeightType, h: &Subgroup) -> CanonicalKey {
    let sorted = p.sorted();
    let t = p.len();

    // For each distinct weight: original positions and target block in the
    // sorted sequence.
    let mut blocks: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut start = 0;
    while start < t {
        let w = sorted.weight(start);
        let len = sorted.weights()[start..].iter().take_while(|&&v| v == w).count();
        let positions = (0..t).filter(|&i| p.weight(i) == w).collect();
        blocks.push((positions, start));
        start += len;
    }

    let mut best: Option<Vec<LElement>> = None;
    let mut target = vec![0usize; t];
    let mut perms: Vec<Vec<usize>> = blocks.iter().map(|(pos, _)| pos.clone()).collect();
    loop {
        for ((_, base), perm) in blocks.iter().zip(&perms) {
            for (offset, &orig) in perm.iter().enumerate() {
                target[orig] = base + offset;
            }
        }
        let mut image: Vec<LElement> = h
            .elements()
            .iter()
            .map(|x| {
                let mut coeffs = vec![0u32; t];
                for (i, &l) in x.coeffs().iter().enumerate() {
                    coeffs[target[i]] = l;
                }
                LElement::from_parts(coeffs, x.c_coeff())
            })
            .collect();
        image.sort();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
        if !next_block_permutation(&mut perms) {
            break;
        }
    }

    CanonicalKey {
        weights: sorted,
        elements: best.expect("at least the sorting permutation"),
    }
}

/// Advances the product of per-block permutations; false after the last.
fn next_block_permutation(perms: &mut [Vec<usize>]) -> bool {
    for perm in perms.iter_mut().rev() {
        if next_permutation(perm) {
            return true;
        }
        // next_permutation left it sorted again: carry into the next block.
    }
    false
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
