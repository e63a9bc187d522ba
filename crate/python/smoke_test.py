"""Smoke test for the pyrectlab extension module.

Build and install first:  maturin develop -m crates/rectlab-py/Cargo.toml
"""

import pyrectlab as rl


def main() -> None:
    p = rl.Permutation.parse("2 4 1 3")
    assert p.entries() == [2, 4, 1, 3]
    assert len(p) == 4 and str(p) == "2 4 1 3"
    assert "separable" not in p.classes()
    assert "separable" in rl.Permutation([1, 2, 3]).classes()

    weak = rl.gamma_w(p)
    strong = rl.gamma_s(p)
    assert weak.n == 4 and len(strong.rects()) == 4
    assert rl.Rectangulation.from_json(strong.to_json()) == strong
    assert p in strong.fiber(strong=True)
    assert p in weak.fiber(strong=False)
    assert rl.gamma_s(strong.strong_key()) == strong
    assert weak.render("svg").startswith("<svg")

    walk = rl.encode_walk(p)
    assert rl.decode_walk(walk).strong_key() == strong.strong_key()

    assert rl.count("strong", 5) == 116
    assert rl.count("baxter", 6) == 422
    assert rl.count("strong-guillotine", 12) == 45755516

    c = rl.growth_constants()
    assert abs(c["gamma"] - (9 + 113 ** 0.5) / 2) < 1e-9
    assert c["rho_zero"] == (2, 27)

    passed, report = rl.run_verify(["weak", "walks"], 5)
    assert passed, report

    try:
        rl.Permutation([1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid permutation accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
