use proptest::prelude::*;
use refbench_core::extract::{extract, fragments};

fn piece() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("public int add(int a, int b) {\n    return a + b;\n}".to_owned()),
        Just(
            "/** Helper. */\nprivate static String name(Object o) {\n    if (o == null) { return \"{\"; }\n    return o.toString();\n}"
                .to_owned()
        ),
        Just("class Box<T> {\n    T value;\n    T get() { return value; }\n}".to_owned()),
        Just("@Override\npublic boolean equals(Object other) { return other == this; }".to_owned()),
        Just("int total = price * quantity;".to_owned()),
        Just("Here is the refactored code:".to_owned()),
        Just("I extracted the expression into a variable.\nThis keeps behavior unchanged.".to_owned()),
        Just("Hope this helps".to_owned()),
        Just("interface Shape { double area(); }".to_owned()),
        "[a-z]{1,8}( [a-z]{1,8}){0,5}".prop_map(|s| s),
    ]
}

fn document() -> impl Strategy<Value = String> {
    prop::collection::vec((piece(), any::<bool>(), prop_oneof![Just("\n"), Just("\n\n")]), 0..8).prop_map(|parts| {
        let mut out = String::new();
        for (text, fenced, sep) in parts {
            if fenced {
                out.push_str("```java\n");
                out.push_str(&text);
                out.push_str("\n```");
            } else {
                out.push_str(&text);
            }
            out.push_str(sep);
        }
        out
    })
}

fn non_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn without_fence_lines(s: &str) -> String {
    s.lines().filter(|l| !l.trim_start().starts_with("```")).collect::<Vec<_>>().join("\n")
}

proptest! {
    #[test]
    fn extraction_is_idempotent(doc in document()) {
        let first = extract(&doc);
        let second = extract(&first.join());
        prop_assert_eq!(first, second);
    }

    #[test]
    fn fragments_reconstruct_content(doc in document()) {
        let joined: String = fragments(&doc).iter().map(|f| f.text.as_str()).collect();
        prop_assert_eq!(non_ws(&joined), non_ws(&without_fence_lines(&doc)));
    }

    #[test]
    fn classification_is_deterministic(doc in document()) {
        prop_assert_eq!(extract(&doc), extract(&doc));
    }

    #[test]
    fn fenced_method_bytes_survive(indent in "[ \t]{0,4}", name in "[a-z][a-zA-Z0-9]{0,8}") {
        let body = format!("void {name}() {{\n{indent}call(\"x\");\n}}");
        let e = extract(&format!("```java\n{body}\n```"));
        prop_assert_eq!(e.methods, vec![body]);
    }
}
