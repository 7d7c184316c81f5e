/// An integer partition of `n` in multiplicity form: `e[j-1]` is the number of
/// parts equal to `j`, so that `sum_j j * e_j = n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionMultiplicity {
    multiplicities: Vec<u32>,
}

impl PartitionMultiplicity {
    pub fn new(multiplicities: Vec<u32>) -> Self {
        PartitionMultiplicity { multiplicities }
    }

    /// `(e_1, ..., e_k)`.
    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn total(&self) -> u64 {
        self.multiplicities.iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e as u64).sum()
    }

    /// Parts in weakly decreasing order (row form).
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (i, &e) in self.multiplicities.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i as u32 + 1).take(e as usize));
        }
        parts
    }
}

/// Every partition of `n`, as multiplicity vectors of length `n`, in
/// lexicographic order of `(e_1, ..., e_n)`.
pub fn partitions(n: usize) -> Vec<PartitionMultiplicity> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(1, n, &mut current, &mut out);
    out
}

fn fill(part: usize, remaining: usize, current: &mut Vec<u32>, out: &mut Vec<PartitionMultiplicity>) {
    let n = current.len();
    if part > n {
        if remaining == 0 {
            out.push(PartitionMultiplicity::new(current.clone()));
        }
        return;
    }
    if remaining > 0 && remaining < part {
        return;
    }
    for e in 0..=remaining / part {
        current[part - 1] = e as u32;
        fill(part + 1, remaining - e * part, current, out);
    }
    current[part - 1] = 0;
}
