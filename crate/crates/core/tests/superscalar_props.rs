#[path = "support/properties.rs"]
mod properties;

#[test]
fn canonical_form_is_unique() {
    properties::canonical_form_is_unique().unwrap();
}

#[test]
fn multiplication_is_associative_and_distributive() {
    properties::multiplication_is_associative().unwrap();
}

#[test]
fn multiplication_is_supercommutative() {
    properties::multiplication_is_supercommutative().unwrap();
}

#[test]
fn reduction_is_idempotent() {
    properties::reduction_is_idempotent().unwrap();
}

#[test]
fn nullspace_vectors_are_exact() {
    properties::nullspace_vectors_are_exact().unwrap();
}
