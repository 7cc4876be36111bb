use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::kernel::{MonomialOrder, Polynomial};

type Key<E> = (MonomialOrder, Vec<Polynomial<E>>);

/// Reduced Gröbner bases keyed by `(order, generators)`. Reads take a shared
/// lock, so concurrent jobs on the same ring can look up results in parallel.
#[derive(Debug)]
pub struct GbCache<E> {
    map: RwLock<HashMap<Key<E>, Arc<Vec<Polynomial<E>>>>>,
}

impl<E> Default for GbCache<E> {
    fn default() -> Self {
        Self {
            map: RwLock::new(HashMap::new()),
        }
    }
}

impl<E: Clone + Eq + Hash> GbCache<E> {
    pub fn get(&self, order: &MonomialOrder, gens: &[Polynomial<E>]) -> Option<Arc<Vec<Polynomial<E>>>> {
        let key = (order.clone(), gens.to_vec());
        self.map.read().expect("cache lock").get(&key).cloned()
    }

    pub fn insert(&self, order: &MonomialOrder, gens: &[Polynomial<E>], basis: Arc<Vec<Polynomial<E>>>) {
        self.map
            .write()
            .expect("cache lock")
            .insert((order.clone(), gens.to_vec()), basis);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
