use std::collections::HashMap;

use super::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

/// A permutation group closed out into a table, keeping the permutation
/// behind each element and how BFS first reached it.
#[derive(Clone, Debug)]
pub struct PermutationClosure {
    pub group: FiniteGroup,
    /// `perms[g]` is the permutation (image array) of element `g`.
    pub perms: Vec<Vec<usize>>,
    /// `parent[g] = Some((h, s))` when `g = h * gen_s` was first found; `None` for the identity.
    pub parent: Vec<Option<(usize, usize)>>,
}

/// Composition with the right factor applied first: `(a * b)[i] = a[b[i]]`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn validate(generators: &[Vec<usize>]) -> Result<usize> {
    let degree = generators.first().map_or(0, Vec::len);
    for (index, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(Error::InvalidPermutation {
                index,
                reason: format!("length {} differs from {degree}", g.len()),
            });
        }
        let mut seen = vec![false; degree];
        for &x in g {
            if x >= degree {
                return Err(Error::InvalidPermutation {
                    index,
                    reason: format!("image {x} out of range"),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation {
                    index,
                    reason: format!("image {x} repeated"),
                });
            }
        }
    }
    Ok(degree)
}

/// Closes the generators under composition. Elements are indexed in BFS
/// discovery order from the identity (index 0).
pub fn group_from_permutations_bounded(
    generators: &[Vec<usize>],
    max_order: usize,
) -> Result<PermutationClosure> {
    let degree = validate(generators)?;
    let id: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut perms = vec![id];
    let mut parent = vec![None];
    let mut head = 0;
    while head < perms.len() {
        for (s, gen) in generators.iter().enumerate() {
            let next = compose(&perms[head], gen);
            if index.contains_key(&next) {
                continue;
            }
            if perms.len() == max_order {
                return Err(Error::ClosureLimitExceeded {
                    reached: max_order + 1,
                    max: max_order,
                });
            }
            index.insert(next.clone(), perms.len());
            perms.push(next);
            parent.push(Some((head, s)));
        }
        head += 1;
    }
    let n = perms.len();
    let mut mul = Vec::with_capacity(n * n);
    for a in &perms {
        for b in &perms {
            mul.push(index[&compose(a, b)]);
        }
    }
    let group = FiniteGroup::from_flat(n, mul, format!("perm{degree}/{n}"))?;
    Ok(PermutationClosure {
        group,
        perms,
        parent,
    })
}

pub fn group_from_permutations(generators: &[Vec<usize>]) -> Result<FiniteGroup> {
    Ok(group_from_permutations_bounded(generators, DEFAULT_MAX_ORDER)?.group)
}

impl PermutationClosure {
    /// Extends per-generator images to every element along the BFS tree, so
    /// that `images[g * gen_s] = combine(images[g], gen_images[s])`.
    pub fn extend<T: Clone>(
        &self,
        identity: T,
        gen_images: &[T],
        combine: impl Fn(&T, &T) -> T,
    ) -> Vec<T> {
        let mut out: Vec<T> = Vec::with_capacity(self.perms.len());
        out.push(identity);
        for p in self.parent.iter().skip(1) {
            let (h, s) = p.expect("non-identity elements have a parent");
            let img = combine(&out[h], &gen_images[s]);
            out.push(img);
        }
        out
    }
}
