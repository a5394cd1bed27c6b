//! Per-node distance-vector classes.
//!
//! For a node with bag `B` and processed set `V(G_i)`, the inside classes
//! are the distance vectors to `B` realized by processed vertices, the
//! outside classes those realized by the rest of the graph. Classes are
//! interned per node; transitions translate ids through the stored
//! vectors.

use crate::graph::DistanceMatrix;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct NodeClasses {
    pub bag: Vec<usize>,
    /// Position of the vertex introduced/forgotten relative to the child
    /// bag, where applicable; set by the dynamic programs.
    pub int_vecs: Vec<Vec<u16>>,
    pub ext_vecs: Vec<Vec<u16>>,
    int_index: HashMap<Vec<u16>, usize>,
    ext_index: HashMap<Vec<u16>, usize>,
    /// Inside class of every processed vertex.
    pub int_of_vertex: HashMap<usize, usize>,
    /// Inside classes realized by processed vertices outside the bag.
    pub int_realized_outside_bag: Vec<bool>,
}

impl NodeClasses {
    pub fn build(dm: &DistanceMatrix, bag: &[usize], processed: &[usize]) -> Self {
        let n = dm.vertex_count();
        let mut inside = vec![false; n];
        for &v in processed {
            inside[v] = true;
        }
        let mut classes = NodeClasses {
            bag: bag.to_vec(),
            int_vecs: Vec::new(),
            ext_vecs: Vec::new(),
            int_index: HashMap::new(),
            ext_index: HashMap::new(),
            int_of_vertex: HashMap::new(),
            int_realized_outside_bag: Vec::new(),
        };
        let in_bag = |v: usize| bag.binary_search(&v).is_ok();
        for v in 0..n {
            let vec: Vec<u16> = bag.iter().map(|&b| dm.dist(v, b) as u16).collect();
            if inside[v] {
                let next = classes.int_vecs.len();
                let id = *classes.int_index.entry(vec.clone()).or_insert(next);
                if id == next {
                    classes.int_vecs.push(vec);
                    classes.int_realized_outside_bag.push(false);
                }
                if !in_bag(v) {
                    classes.int_realized_outside_bag[id] = true;
                }
                classes.int_of_vertex.insert(v, id);
            } else {
                let next = classes.ext_vecs.len();
                let id = *classes.ext_index.entry(vec.clone()).or_insert(next);
                if id == next {
                    classes.ext_vecs.push(vec);
                }
            }
        }
        classes
    }

    pub fn int_count(&self) -> usize {
        self.int_vecs.len()
    }

    pub fn ext_count(&self) -> usize {
        self.ext_vecs.len()
    }

    pub fn int_id(&self, vec: &[u16]) -> Option<usize> {
        self.int_index.get(vec).copied()
    }

    pub fn ext_id(&self, vec: &[u16]) -> Option<usize> {
        self.ext_index.get(vec).copied()
    }

    /// Index into a flattened inside-by-outside grid.
    pub fn pair_index(&self, int_id: usize, ext_id: usize) -> usize {
        int_id * self.ext_vecs.len().max(1) + ext_id
    }

    pub fn pair_bits(&self) -> usize {
        self.int_vecs.len() * self.ext_vecs.len().max(1)
    }

    /// Index into a flattened unordered inside-pair grid (i <= j).
    pub fn unordered_index(&self, a: usize, b: usize) -> usize {
        let (i, j) = if a <= b { (a, b) } else { (b, a) };
        i * self.int_vecs.len() + j
    }

    pub fn unordered_bits(&self) -> usize {
        self.int_vecs.len() * self.int_vecs.len()
    }
}
