use std::collections::HashMap;

use num_integer::Integer;

use super::{LElement, WeightType};

/// Dense indexed view of tL(p).
///
/// A torsion element is determined by its `x_i` coefficients (the map
/// tL(p) -> L(p)/Zc is injective), so tL(p) is stored as a subgroup of
/// `Z/p1 x ... x Z/pt` with componentwise addition. Index 0 is zero and
/// indices follow the sorted order of the corresponding [`LElement`]s.
pub(crate) struct TorsionGroup {
    weights: Vec<u32>,
    coeffs: Vec<u32>,
    cvals: Vec<i64>,
    index: HashMap<Vec<u32>, u32>,
}

impl TorsionGroup {
    pub(crate) fn new(p: &WeightType) -> Self {
        let weights = p.weights().to_vec();
        let t = weights.len();
        let lcm = p.lcm() as i64;
        let mut coeffs = Vec::new();
        let mut cvals = Vec::new();

        if t == 0 {
            cvals.push(0);
        } else {
            // Walk the first t-1 coordinates in lexicographic order and solve
            // for the last: l_t * (lcm/p_t) = -S (mod lcm).
            let last = i64::from(weights[t - 1]);
            let step = lcm / last;
            let mut head = vec![0u32; t - 1];
            loop {
                let s: i64 = head
                    .iter()
                    .zip(&weights)
                    .map(|(&l, &w)| i64::from(l) * (lcm / i64::from(w)))
                    .sum();
                let r = (-s).rem_euclid(lcm);
                if r % step == 0 {
                    let lt = r / step;
                    coeffs.extend_from_slice(&head);
                    coeffs.push(lt as u32);
                    let total = s + lt * step;
                    debug_assert_eq!(total % lcm, 0);
                    cvals.push(-(total / lcm));
                }
                if !advance(&mut head, &weights[..t - 1]) {
                    break;
                }
            }
        }

        let index = (0..cvals.len())
            .map(|i| (coeffs[i * t..(i + 1) * t].to_vec(), i as u32))
            .collect();
        TorsionGroup {
            weights,
            coeffs,
            cvals,
            index,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.cvals.len()
    }

    pub(crate) fn t(&self) -> usize {
        self.weights.len()
    }

    pub(crate) fn coeffs(&self, i: u32) -> &[u32] {
        let t = self.t();
        let i = i as usize;
        &self.coeffs[i * t..(i + 1) * t]
    }

    pub(crate) fn element(&self, i: u32) -> LElement {
        LElement::from_parts(self.coeffs(i).to_vec(), self.cvals[i as usize])
    }

    pub(crate) fn elements(&self) -> impl Iterator<Item = LElement> + '_ {
        (0..self.len() as u32).map(|i| self.element(i))
    }

    pub(crate) fn index_of(&self, coeffs: &[u32]) -> Option<u32> {
        self.index.get(coeffs).copied()
    }

    pub(crate) fn add(&self, i: u32, j: u32) -> u32 {
        let sum: Vec<u32> = self
            .coeffs(i)
            .iter()
            .zip(self.coeffs(j))
            .zip(&self.weights)
            .map(|((&a, &b), &p)| (a + b) % p)
            .collect();
        self.index_of(&sum).expect("torsion group is closed under addition")
    }

    /// Order of element `i`: lcm over coordinates of `p_k / gcd(l_k, p_k)`.
    pub(crate) fn order(&self, i: u32) -> u64 {
        self.coeffs(i)
            .iter()
            .zip(&self.weights)
            .fold(1u64, |acc, (&l, &p)| {
                let p = u64::from(p);
                acc.lcm(&(p / u64::from(l).gcd(&p)))
            })
    }
}

/// Mixed-radix increment; false once every combination has been visited.
fn advance(digits: &mut [u32], radices: &[u32]) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < radices[k] {
            return true;
        }
        digits[k] = 0;
    }
    false
}
