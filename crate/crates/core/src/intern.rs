//! Dense ids for structural values.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::hash::Hash;

/// Maps values to dense ids in first-seen order.
#[derive(Clone, Debug)]
pub struct Interner<T: Eq + Hash + Clone> {
    items: Vec<T>,
    ids: HashMap<T, u32>,
}

impl<T: Eq + Hash + Clone + Serialize> Serialize for Interner<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.items.serialize(s)
    }
}

impl<'de, T: Eq + Hash + Clone + Deserialize<'de>> Deserialize<'de> for Interner<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<T>::deserialize(d)?;
        let mut i = Interner { items, ids: HashMap::new() };
        i.rebuild();
        Ok(i)
    }
}

impl<T: Eq + Hash + Clone> Default for Interner<T> {
    fn default() -> Self {
        Interner { items: Vec::new(), ids: HashMap::new() }
    }
}

impl<T: Eq + Hash + Clone> Interner<T> {
    pub fn intern(&mut self, value: &T) -> u32 {
        if let Some(&id) = self.ids.get(value) {
            return id;
        }
        let id = self.items.len() as u32;
        self.items.push(value.clone());
        self.ids.insert(value.clone(), id);
        id
    }

    pub fn get(&self, value: &T) -> Option<u32> {
        self.ids.get(value).copied()
    }

    pub fn resolve(&self, id: u32) -> &T {
        &self.items[id as usize]
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[T] {
        &self.items
    }

    /// Rebuild the reverse map after deserialization.
    pub fn rebuild(&mut self) {
        self.ids = self.items.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_dense_and_stable() {
        let mut i = Interner::default();
        assert_eq!(i.intern(&"a"), 0);
        assert_eq!(i.intern(&"b"), 1);
        assert_eq!(i.intern(&"a"), 0);
        assert_eq!(*i.resolve(1), "b");
        assert_eq!(i.len(), 2);
    }
}
