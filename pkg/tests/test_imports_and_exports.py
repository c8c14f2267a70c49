import sympolar


def test_top_level_imports() -> None:
    # the public API is importable from the package root
    assert hasattr(sympolar, "decompose")
    assert hasattr(sympolar, "normal_form")
    assert hasattr(sympolar.decompositions, "factorization_from_factors")
    assert hasattr(sympolar.channels, "williamson")
    assert hasattr(sympolar.linalg, "hamiltonian_sqrt")


def test_exports_resolve() -> None:
    for name in sympolar.__all__:
        assert getattr(sympolar, name) is not None, name
