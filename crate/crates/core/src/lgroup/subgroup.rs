use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::{LElement, TorsionGroup, WeightType};
use crate::error::{Error, Result};

/// A finite subgroup of tL(p), stored with its full sorted element list.
///
/// Equality and hashing ignore the generators: two subgroups are equal when
/// they have the same ambient type and element set.
#[derive(Clone, Debug, Serialize)]
pub struct Subgroup {
    #[serde(skip)]
    ambient: WeightType,
    generators: Vec<LElement>,
    order: usize,
    #[serde(skip)]
    elements: Vec<LElement>,
}

/// Input shape for a subgroup: `{"generators": ["x1-2*x3", ...]}`.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub generators: Vec<String>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.elements.hash(state);
    }
}

impl Subgroup {
    /// Closure of `gens` under the group law.
    pub fn generate(p: &WeightType, gens: &[LElement]) -> Result<Subgroup> {
        for g in gens {
            p.check_owns(g)?;
            if !p.is_torsion(g) {
                return Err(Error::NonTorsionGenerator(g.to_string()));
            }
        }
        let mut seen: HashSet<LElement> = HashSet::from([p.zero()]);
        let mut frontier = vec![p.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = p.add(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<LElement> = seen.into_iter().collect();
        elements.sort();
        Ok(Subgroup {
            ambient: p.clone(),
            generators: gens.to_vec(),
            order: elements.len(),
            elements,
        })
    }

    /// The whole torsion subgroup tL(p).
    pub fn whole_torsion(p: &WeightType) -> Subgroup {
        let elements = p.torsion_elements();
        let generators = p
            .torsion_generators()
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        Subgroup {
            ambient: p.clone(),
            generators,
            order: elements.len(),
            elements,
        }
    }

    pub fn trivial(p: &WeightType) -> Subgroup {
        Subgroup {
            ambient: p.clone(),
            generators: Vec::new(),
            order: 1,
            elements: vec![p.zero()],
        }
    }

    /// Assembles a subgroup from an already closed, sorted element list.
    pub(crate) fn from_sorted_elements(
        p: &WeightType,
        generators: Vec<LElement>,
        elements: Vec<LElement>,
    ) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            ambient: p.clone(),
            generators,
            order: elements.len(),
            elements,
        }
    }

    pub fn ambient(&self) -> &WeightType {
        &self.ambient
    }

    pub fn generators(&self) -> &[LElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[LElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, x: &LElement) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_whole_torsion(&self) -> bool {
        self.order as u64 == self.ambient.torsion_order()
    }

    /// A short generating set for display: greedily adds the element that
    /// enlarges the span the most, ties broken by element order.
    pub fn small_generating_set(&self) -> Vec<LElement> {
        let p = &self.ambient;
        let tg = TorsionGroup::new(p);
        let idx: Vec<u32> = self
            .elements
            .iter()
            .map(|x| tg.index_of(x.coeffs()).expect("subgroup of torsion"))
            .collect();
        let mut span = vec![false; tg.len()];
        span[0] = true;
        let mut span_list = vec![0u32];
        let mut gens = Vec::new();
        while span_list.len() < self.order {
            let mut best: Option<(usize, u32)> = None;
            for &x in &idx {
                if span[x as usize] {
                    continue;
                }
                let size = extend_span(&tg, &span, &span_list, x).len();
                if best.is_none_or(|(s, _)| size > s) {
                    best = Some((size, x));
                }
            }
            let (_, x) = best.expect("span is a proper subgroup");
            span_list = extend_span(&tg, &span, &span_list, x);
            for &y in &span_list {
                span[y as usize] = true;
            }
            gens.push(tg.element(x));
        }
        gens
    }

    /// Same subgroup with `generators` replaced by [`Self::small_generating_set`].
    pub fn with_small_generators(mut self) -> Subgroup {
        self.generators = self.small_generating_set();
        self
    }
}

/// Elements of `<span, x>`: the union of cosets `span + k x`.
pub(crate) fn extend_span(tg: &TorsionGroup, in_span: &[bool], span: &[u32], x: u32) -> Vec<u32> {
    let mut out = span.to_vec();
    let mut cur = x;
    while !in_span[cur as usize] {
        out.extend(span.iter().map(|&s| tg.add(s, cur)));
        cur = tg.add(cur, x);
    }
    out
}
