//! Weyl groups of type `A_{n-1}` (permutations) and `C_n` (signed
//! permutations), acting on coordinate vectors.

use std::ops::Neg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylType {
    /// `S_n`, the Weyl group of `SL_n`.
    A,
    /// Signed permutations, the Weyl group of `Sp_2n`.
    C,
}

/// `e_i ↦ signs[i] · e_{perm[i]}`. Type `A` elements have all signs `+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    kind: WeylType,
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn permutation(perm: Vec<usize>) -> Self {
        let n = perm.len();
        WeylElement { kind: WeylType::A, perm, signs: vec![1; n] }
    }

    pub fn signed_permutation(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        assert_eq!(perm.len(), signs.len());
        assert!(signs.iter().all(|s| *s == 1 || *s == -1));
        WeylElement { kind: WeylType::C, perm, signs }
    }

    pub fn identity(kind: WeylType, n: usize) -> Self {
        WeylElement { kind, perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn kind(&self) -> WeylType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `(w · v)_{perm[i]} = signs[i] · v_i`.
    pub fn act<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Clone + Neg<Output = T>,
    {
        assert_eq!(v.len(), self.perm.len());
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 { -x.clone() } else { x.clone() };
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind);
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        WeylElement { kind: self.kind, perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { kind: self.kind, perm, signs }
    }

    /// Every element of the Weyl group of the given type and rank.
    pub fn all(kind: WeylType, n: usize) -> Vec<WeylElement> {
        let perms = permutations(n);
        match kind {
            WeylType::A => perms.into_iter().map(WeylElement::permutation).collect(),
            WeylType::C => {
                let mut out = Vec::with_capacity(perms.len() << n);
                for perm in perms {
                    for mask in 0..(1u32 << n) {
                        let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                        out.push(WeylElement::signed_permutation(perm.clone(), signs));
                    }
                }
                out
            }
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
