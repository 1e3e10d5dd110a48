use crate::semigroup::Factorization;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }

    /// Groups of indices sharing a root. Each group is ascending and the
    /// groups are ordered by their smallest member.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i);
        }
        out
    }
}

/// Connected components of the support-intersection graph on `facts`
/// (an edge joins two vectors whose supports meet). Returned as index groups
/// into `facts`, ordered by smallest index.
pub(crate) fn support_components(facts: &[Factorization]) -> Vec<Vec<usize>> {
    let width = facts.first().map_or(0, |z| z.exponents().len());
    let mut uf = UnionFind::new(facts.len());
    let mut first_with = vec![usize::MAX; width];
    for (idx, z) in facts.iter().enumerate() {
        for i in z.support() {
            if first_with[i] == usize::MAX {
                first_with[i] = idx;
            } else {
                uf.union(first_with[i], idx);
            }
        }
    }
    uf.groups()
}

/// Components as sorted factorization lists, ordered by their lex-smallest
/// member. With `facts` sorted ascending the index order already gives this.
pub(crate) fn component_lists(facts: &[Factorization]) -> Vec<Vec<Factorization>> {
    let mut comps: Vec<Vec<Factorization>> = support_components(facts)
        .into_iter()
        .map(|g| {
            let mut c: Vec<Factorization> = g.into_iter().map(|i| facts[i].clone()).collect();
            c.sort();
            c
        })
        .collect();
    comps.sort_by(|a, b| a[0].cmp(&b[0]));
    comps
}

/// Canonical trade selection: pair the lex-smallest member of every component
/// after the first with the lex-smallest member of the first component.
pub(crate) fn canonical_pairs(components: &[Vec<Factorization>]) -> Vec<(Factorization, Factorization)> {
    components
        .iter()
        .skip(1)
        .map(|c| (components[0][0].clone(), c[0].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_groups_are_ordered() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 0);
        assert_eq!(uf.groups(), vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn disjoint_supports_split() {
        let facts = vec![
            Factorization::new(vec![0, 0, 2, 0]),
            Factorization::new(vec![0, 1, 0, 1]),
        ];
        assert_eq!(support_components(&facts).len(), 2);
    }
}
