//! Objects of the category of linear maps `V -> W` and its monoidal
//! structure: tensor product, interchange, symmetric and exterior powers.

use num_traits::One;

use crate::linear::{LinearMap, Vector};
use crate::scalar::Q;

/// A linear map `delta: V -> W`; `V` is the degree 1 part, `W` the degree 0
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmObject {
    pub delta: LinearMap,
}

impl LmObject {
    pub fn new(delta: LinearMap) -> Self {
        Self { delta }
    }

    pub fn zero(dim_v: usize, dim_w: usize) -> Self {
        Self {
            delta: LinearMap::zero(dim_w, dim_v),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            delta: LinearMap::identity(dim),
        }
    }

    pub fn dim_v(&self) -> usize {
        self.delta.cols()
    }

    pub fn dim_w(&self) -> usize {
        self.delta.rows()
    }
}

/// Block layout of `(V -> W) ⊗ (V' -> W')`.
///
/// Degree 1 is `V ⊗ W'` followed by `W ⊗ V'`, each block in row-major order
/// of its two factors; degree 0 is `W ⊗ W'` in row-major order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

/// A degree 1 basis element of a tensor product, by block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree1Slot {
    /// `v_i ⊗ w'_j`
    VW(usize, usize),
    /// `w_i ⊗ v'_j`
    WV(usize, usize),
}

impl TensorIndex {
    pub fn degree1_dim(&self) -> usize {
        self.left.0 * self.right.1 + self.left.1 * self.right.0
    }

    pub fn degree0_dim(&self) -> usize {
        self.left.1 * self.right.1
    }

    pub fn degree1(&self, slot: Degree1Slot) -> usize {
        match slot {
            Degree1Slot::VW(i, j) => i * self.right.1 + j,
            Degree1Slot::WV(i, j) => self.left.0 * self.right.1 + i * self.right.0 + j,
        }
    }

    pub fn degree1_slot(&self, index: usize) -> Degree1Slot {
        let first = self.left.0 * self.right.1;
        if index < first {
            Degree1Slot::VW(index / self.right.1, index % self.right.1)
        } else {
            let k = index - first;
            Degree1Slot::WV(k / self.right.0, k % self.right.0)
        }
    }

    pub fn degree0(&self, i: usize, j: usize) -> usize {
        i * self.right.1 + j
    }

    pub fn degree0_pair(&self, index: usize) -> (usize, usize) {
        (index / self.right.1, index % self.right.1)
    }
}

/// `(V -> W) ⊗ (V' -> W') = (V⊗W' + W⊗V' -> W⊗W')` with structure map
/// `δ⊗1 + 1⊗δ'`.
pub fn lm_tensor(a: &LmObject, b: &LmObject) -> (LmObject, TensorIndex) {
    let idx = TensorIndex {
        left: (a.dim_v(), a.dim_w()),
        right: (b.dim_v(), b.dim_w()),
    };
    let columns = (0..idx.degree1_dim())
        .map(|k| match idx.degree1_slot(k) {
            Degree1Slot::VW(i, j) => a.delta.column(i).map_keys(|w| idx.degree0(*w, j)),
            Degree1Slot::WV(i, j) => b.delta.column(j).map_keys(|w| idx.degree0(i, *w)),
        })
        .collect();
    (
        LmObject::new(LinearMap::from_columns(idx.degree0_dim(), columns)),
        idx,
    )
}

/// The interchange automorphism of `a ⊗ a`, as `(degree 1, degree 0)`
/// matrices in the basis of [`lm_tensor`]:
/// `x ⊗ y' + y ⊗ x' ↦ x' ⊗ y + y' ⊗ x` and `y ⊗ y' ↦ y' ⊗ y`.
pub fn interchange(a: &LmObject) -> (LinearMap, LinearMap) {
    let (_, idx) = lm_tensor(a, a);
    let deg1 = (0..idx.degree1_dim())
        .map(|k| {
            let image = match idx.degree1_slot(k) {
                Degree1Slot::VW(i, j) => Degree1Slot::WV(j, i),
                Degree1Slot::WV(i, j) => Degree1Slot::VW(j, i),
            };
            Vector::basis(idx.degree1(image))
        })
        .collect();
    let deg0 = (0..idx.degree0_dim())
        .map(|k| {
            let (i, j) = idx.degree0_pair(k);
            Vector::basis(idx.degree0(j, i))
        })
        .collect();
    (
        LinearMap::from_columns(idx.degree1_dim(), deg1),
        LinearMap::from_columns(idx.degree0_dim(), deg0),
    )
}

/// A symmetric or exterior power together with the bases it is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmPower {
    pub object: LmObject,
    /// Degree 1 basis: `(w-indices of the S^{k-1}W or Λ^{k-1}W factor, v)`.
    pub degree1_basis: Vec<(Vec<usize>, usize)>,
    /// Degree 0 basis: sorted index lists (with repetition for `S^k`).
    pub degree0_basis: Vec<Vec<usize>>,
}

/// Non-decreasing sequences of length `k` over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing sequences of length `k` over `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    multisets(n, k)
        .into_iter()
        .filter(|s| s.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// Multiplies a sorted `(k-1)`-tuple of `W` indices by one more index:
/// the sorted key and its sign, or `None` when the product vanishes.
type Join = fn(&[usize], usize) -> Option<(Vec<usize>, Q)>;

fn power(
    a: &LmObject,
    k: usize,
    enumerate: fn(usize, usize) -> Vec<Vec<usize>>,
    join: Join,
) -> LmPower {
    assert!(k >= 1, "powers are defined for k >= 1");
    let degree0_basis = enumerate(a.dim_w(), k);
    let degree1_basis: Vec<(Vec<usize>, usize)> = enumerate(a.dim_w(), k - 1)
        .into_iter()
        .flat_map(|ws| (0..a.dim_v()).map(move |v| (ws.clone(), v)))
        .collect();
    let position = |key: &[usize]| {
        degree0_basis
            .binary_search_by(|probe| probe.as_slice().cmp(key))
            .expect("joined key is a basis element")
    };
    let columns = degree1_basis
        .iter()
        .map(|(ws, v)| {
            let mut out = Vector::zero();
            for (w, c) in a.delta.column(*v) {
                if let Some((key, sign)) = join(ws, *w) {
                    out.add_term(position(&key), c * sign);
                }
            }
            out
        })
        .collect();
    LmPower {
        object: LmObject::new(LinearMap::from_columns(degree0_basis.len(), columns)),
        degree1_basis,
        degree0_basis,
    }
}

/// `S^k(V -> W) = (S^{k-1}W ⊗ V -> S^k W)`, with structure map
/// `w_1⋯w_{k-1} ⊗ v ↦ w_1⋯w_{k-1}·δv`.
pub fn lm_symmetric_power(a: &LmObject, k: usize) -> LmPower {
    power(a, k, multisets, |ws, w| {
        let mut key = ws.to_vec();
        let at = key.partition_point(|&x| x <= w);
        key.insert(at, w);
        Some((key, Q::one()))
    })
}

/// `Λ^k(V -> W) = (Λ^{k-1}W ⊗ V -> Λ^k W)`, with structure map
/// `w_1∧⋯∧w_{k-1} ⊗ v ↦ w_1∧⋯∧w_{k-1}∧δv`.
pub fn lm_exterior_power(a: &LmObject, k: usize) -> LmPower {
    power(a, k, subsets, |ws, w| {
        if ws.contains(&w) {
            return None;
        }
        let mut key = ws.to_vec();
        let at = key.partition_point(|&x| x < w);
        key.insert(at, w);
        // moving w from the end to position `at` passes len - at factors
        let sign = if (ws.len() - at) % 2 == 0 {
            Q::one()
        } else {
            -Q::one()
        };
        Some((key, sign))
    })
}
