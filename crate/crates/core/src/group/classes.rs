use super::FiniteGroup;

/// Conjugacy classes `C0 = {e}, C1, ..., Cd`.
///
/// After `C0` the classes are sorted by size and then by least element, so
/// class indices are deterministic for a given table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Index `i'` with `C_i' = {g^-1 : g in C_i}`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    /// Number of classes, `d + 1`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyPartition {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut orbit = Vec::new();
        for by in 0..n {
            let y = g.conjugate(x, by);
            if !assigned[y] {
                assigned[y] = true;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        raw.push(orbit);
    }
    // raw[0] is {0}; x = 0 is visited first.
    let mut rest = raw.split_off(1);
    rest.sort_by_key(|c| (c.len(), c[0]));
    raw.extend(rest);

    let mut class_of = vec![0; n];
    for (i, c) in raw.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let inverse_class = raw.iter().map(|c| class_of[g.inv(c[0])]).collect();
    ConjugacyPartition {
        classes: raw,
        class_of,
        inverse_class,
    }
}
