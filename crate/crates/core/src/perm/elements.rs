use std::hash::BuildHasher;

use hashbrown::hash_table::Entry;
use hashbrown::{DefaultHashBuilder, HashTable};
use rayon::prelude::*;

use super::permutation::compose_into;
use super::Permutation;

/// All elements of a group, stored contiguously and indexed by hash.
///
/// Element `i` occupies `data[i * degree..(i + 1) * degree]`. Index 0 is
/// always the identity.
pub struct ElementTable {
    degree: usize,
    data: Vec<u16>,
    index: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl ElementTable {
    fn new(degree: usize, capacity: usize) -> Self {
        Self {
            degree,
            data: Vec::with_capacity(degree * capacity),
            index: HashTable::with_capacity(capacity),
            hasher: DefaultHashBuilder::default(),
        }
    }

    /// Breadth-first closure of the identity under right multiplication by
    /// `generators`. Each BFS layer is sorted before it is appended, so the
    /// element order is reproducible.
    pub(crate) fn closure(degree: usize, generators: &[Permutation], expected: usize) -> Self {
        let mut table = Self::new(degree, expected);
        table.insert(Permutation::identity(degree).images());
        let mut layer_start = 0;
        while layer_start < table.len() {
            let layer_end = table.len();
            let mut fresh: Vec<Box<[u16]>> = (layer_start..layer_end)
                .into_par_iter()
                .flat_map_iter(|i| {
                    let table = &table;
                    let x = table.get(i);
                    generators.iter().filter_map(move |g| {
                        let mut buf = vec![0u16; degree];
                        compose_into(x, g.images(), &mut buf);
                        table
                            .index_of(&buf)
                            .is_none()
                            .then(|| buf.into_boxed_slice())
                    })
                })
                .collect();
            fresh.par_sort_unstable();
            fresh.dedup();
            for images in &fresh {
                table.insert(images);
            }
            layer_start = layer_end;
        }
        table
    }

    fn insert(&mut self, images: &[u16]) -> usize {
        debug_assert_eq!(images.len(), self.degree);
        let hash = self.hasher.hash_one(images);
        let degree = self.degree;
        let data = &self.data;
        let next = (data.len() / degree) as u32;
        match self.index.entry(
            hash,
            |&i| &data[i as usize * degree..(i as usize + 1) * degree] == images,
            |&i| {
                self.hasher
                    .hash_one(&data[i as usize * degree..(i as usize + 1) * degree])
            },
        ) {
            Entry::Occupied(e) => *e.get() as usize,
            Entry::Vacant(e) => {
                e.insert(next);
                self.data.extend_from_slice(images);
                next as usize
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Image array of element `i`.
    #[inline]
    pub fn get(&self, i: usize) -> &[u16] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn permutation(&self, i: usize) -> Permutation {
        Permutation::from_raw(self.get(i).into())
    }

    pub fn index_of(&self, images: &[u16]) -> Option<usize> {
        if images.len() != self.degree {
            return None;
        }
        let hash = self.hasher.hash_one(images);
        self.index
            .find(hash, |&i| self.get(i as usize) == images)
            .map(|&i| i as usize)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u16]> + '_ {
        self.data.chunks_exact(self.degree)
    }

    pub fn to_permutations(&self) -> Vec<Permutation> {
        (0..self.len()).map(|i| self.permutation(i)).collect()
    }
}

impl std::fmt::Debug for ElementTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ElementTable")
            .field("degree", &self.degree)
            .field("len", &self.len())
            .finish()
    }
}
