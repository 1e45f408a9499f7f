mod common;

use common::{alphabet, reduce_oracle};
use graev_core::words::{abelianize, bn_member, normal_form, reduce, word_inverse, word_product};
use graev_core::{AbelianWord, Generator, Letter, Word};
use proptest::prelude::*;

fn letter(gens: usize) -> impl Strategy<Value = Letter> {
    prop_oneof![
        1 => Just(Letter::Neutral),
        4 => (0..gens, any::<bool>()).prop_map(|(g, pos)| if pos { Letter::pos(g) } else { Letter::neg(g) }),
    ]
}

fn word(gens: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(gens), 0..=max).prop_map(Word::new)
}

fn abelian(gens: usize) -> impl Strategy<Value = AbelianWord> {
    prop::collection::vec((0..gens, -4i64..=4), 0..5)
        .prop_map(|terms| AbelianWord::from_terms(terms.into_iter().map(|(g, m)| (Generator(g), m))))
}

proptest! {
    #[test]
    fn reduce_matches_stack_oracle(w in word(3, 12)) {
        let expected = reduce_oracle(w.letters());
        let r = reduce(&w);
        prop_assert_eq!(r.letters(), expected.as_slice());
    }

    #[test]
    fn reduce_is_idempotent_and_reduced(w in word(3, 12)) {
        let r = reduce(&w);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(reduce(&r), r);
    }

    #[test]
    fn reduce_keeps_length_parity(w in word(3, 12)) {
        let r = reduce(&w);
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!((w.len() - w.count_neutral()) % 2, r.len() % 2);
    }

    #[test]
    fn normal_form_round_trips(w in word(3, 12)) {
        let nf = normal_form(&w);
        prop_assert_eq!(nf.to_word(), reduce(&w));
        for pair in nf.terms().windows(2) {
            prop_assert_ne!(pair[0].0, pair[1].0);
        }
        prop_assert!(nf.terms().iter().all(|&(_, r)| r != 0));
    }

    #[test]
    fn abelianize_is_a_homomorphism(u in word(3, 8), v in word(3, 8)) {
        prop_assert_eq!(abelianize(&word_product(&u, &v)), abelianize(&u).add(&abelianize(&v)));
        prop_assert_eq!(abelianize(&reduce(&u)), abelianize(&u));
        prop_assert_eq!(abelianize(&word_inverse(&u)), abelianize(&u).neg());
    }

    #[test]
    fn inverse_cancels(w in word(3, 10)) {
        prop_assert!(reduce(&word_product(&w, &word_inverse(&w))).is_empty());
        prop_assert!(reduce(&word_product(&word_inverse(&w), &w)).is_empty());
    }

    #[test]
    fn ball_membership_is_reduced_length(w in word(3, 10), n in 0usize..8) {
        prop_assert_eq!(bn_member(&w, n), reduce(&w).len() <= n);
    }

    #[test]
    fn word_display_parses_back(w in word(3, 10)) {
        let a = alphabet(3);
        let text = w.display(&a).to_string();
        let back = Word::parse(&text, &a).unwrap();
        if w.is_empty() {
            prop_assert_eq!(back, Word::letter(Letter::Neutral));
        } else {
            prop_assert_eq!(back, w);
        }
    }

    #[test]
    fn abelian_display_parses_back(h in abelian(3)) {
        let a = alphabet(3);
        let back = AbelianWord::parse(&h.display(&a).to_string(), &a).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn abelian_length_and_letters(h in abelian(3)) {
        let letters = h.letters();
        prop_assert_eq!(letters.len(), h.length());
        let rebuilt = letters.iter().fold(AbelianWord::identity(), |acc, l| {
            acc.add(&AbelianWord::from_terms([(l.generator().unwrap(), l.exponent())]))
        });
        prop_assert_eq!(rebuilt, h);
    }
}

#[test]
fn powers_expand_to_repeated_letters() {
    let a = alphabet(2);
    let w = Word::parse("a^-2 b^3 e", &a).unwrap();
    assert_eq!(
        w.letters(),
        &[Letter::neg(0), Letter::neg(0), Letter::pos(1), Letter::pos(1), Letter::pos(1), Letter::Neutral]
    );
    assert!(Word::parse("z", &a).is_err());
}
