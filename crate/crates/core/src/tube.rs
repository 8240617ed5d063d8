//! Finite abelian group actions on a stable tube of rank p.
//!
//! A group of order n acting through `<tau^k>` splits the tube into `nk/p`
//! tubes of rank k. [`tube_quotient_oracle`] recomputes this by building the
//! quotient quiver of the cyclic quiver and counting its components.

use std::collections::BTreeMap;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct TubeAction {
    rank: u64,
    group_order: u64,
    image_k: u64,
}

impl TubeAction {
    pub fn new(rank: u64, group_order: u64, image_k: u64) -> Result<Self> {
        let invalid = |reason| Error::InvalidAction {
            rank,
            order: group_order,
            k: image_k,
            reason,
        };
        if rank == 0 || group_order == 0 || image_k == 0 {
            return Err(invalid("rank, order and k must be positive"));
        }
        if !rank.is_multiple_of(image_k) {
            return Err(invalid("k must divide the rank"));
        }
        match group_order.checked_mul(image_k) {
            Some(nk) if nk % rank == 0 => {}
            Some(_) => return Err(invalid("the rank must divide n*k")),
            None => return Err(invalid("n*k overflows")),
        }
        Ok(TubeAction {
            rank,
            group_order,
            image_k,
        })
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn image_k(&self) -> u64 {
        self.image_k
    }
}

/// Multiset of tubes, keyed by rank.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TubeDecomposition {
    parts: BTreeMap<u64, u64>,
}

impl TubeDecomposition {
    pub fn parts(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.parts.iter().map(|(&r, &c)| (r, c))
    }

    pub fn count(&self, rank: u64) -> u64 {
        self.parts.get(&rank).copied().unwrap_or(0)
    }

    /// `sum count * rank`: the number of simple objects.
    pub fn simples(&self) -> u64 {
        self.parts().map(|(r, c)| r * c).sum()
    }

    fn add(&mut self, rank: u64, count: u64) {
        *self.parts.entry(rank).or_insert(0) += count;
    }
}

impl Serialize for TubeDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<[u64; 2]> = self.parts().map(|(r, c)| [r, c]).collect();
        let mut s = serializer.serialize_struct("TubeDecomposition", 1)?;
        s.serialize_field("parts", &parts)?;
        s.end()
    }
}

pub fn tube_quotient(a: &TubeAction) -> TubeDecomposition {
    let mut out = TubeDecomposition::default();
    out.add(a.image_k, a.group_order * a.image_k / a.rank);
    out
}

pub fn tube_quotient_oracle(a: &TubeAction) -> Result<TubeDecomposition> {
    let p = a.rank as usize;
    let k = a.image_k as usize;
    let n = a.group_order;

    // Orbits of Z/p under i -> i + k.
    let mut orbit_of = vec![usize::MAX; p];
    let mut reps = Vec::new();
    for start in 0..p {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(start);
        let mut i = start;
        while orbit_of[i] == usize::MAX {
            orbit_of[i] = id;
            i = (i + k) % p;
        }
    }
    let orbit_size = p / reps.len();

    // Orbit-stabilizer; every stabilizer irrep is one-dimensional.
    if !n.is_multiple_of(orbit_size as u64) {
        return Err(Error::InvalidAction {
            rank: a.rank,
            order: a.group_order,
            k: a.image_k,
            reason: "orbit size does not divide the group order",
        });
    }
    let irreps = (n / orbit_size as u64) as usize;

    // Vertex (orbit, u) has index orbit * irreps + u; one arrow to
    // (orbit(rep - 1), u).
    let vertices = reps.len() * irreps;
    let mut target = vec![0usize; vertices];
    for (o, &r) in reps.iter().enumerate() {
        let prev = orbit_of[(r + p - 1) % p];
        for u in 0..irreps {
            target[o * irreps + u] = prev * irreps + u;
        }
    }

    let mut in_degree = vec![0usize; vertices];
    for &v in &target {
        in_degree[v] += 1;
    }
    assert!(in_degree.iter().all(|&d| d == 1), "quotient quiver is not a union of cycles");

    let mut seen = vec![false; vertices];
    let mut out = TubeDecomposition::default();
    for v in 0..vertices {
        if seen[v] {
            continue;
        }
        let mut len = 0u64;
        let mut w = v;
        while !seen[w] {
            seen[w] = true;
            len += 1;
            w = target[w];
        }
        out.add(len, 1);
    }
    Ok(out)
}
