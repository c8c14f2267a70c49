import numpy as np
import pytest

from sympolar.channels import GaussianChannelTriple, validate_channel
from sympolar.core import GeneratorKind, StructureKind, check_structure, structure_residual
from sympolar.data import RandomInstanceGenerator, generate
from sympolar.data.generators import MAX_CONDITION


@pytest.mark.parametrize("kind", list(GeneratorKind))
def test_same_seed_same_instance(kind: GeneratorKind) -> None:
    first = generate(kind, 2, seed=42)
    second = generate(kind, 2, seed=42)
    if isinstance(first, GaussianChannelTriple):
        assert isinstance(second, GaussianChannelTriple)
        np.testing.assert_array_equal(first.K, second.K)
        np.testing.assert_array_equal(first.l, second.l)
        np.testing.assert_array_equal(first.alpha, second.alpha)
    else:
        np.testing.assert_array_equal(first, second)


def test_different_seeds_differ() -> None:
    assert not np.array_equal(generate("nondegenerate", 2, 1), generate("nondegenerate", 2, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_instances_have_their_structure(n: int) -> None:
    generator = RandomInstanceGenerator(2024)
    for _ in range(5):
        X = generator.nondegenerate(n)
        assert X.shape == (2 * n, 2 * n)
        assert np.linalg.cond(X) <= MAX_CONDITION

        S = generator.symplectic(n)
        residual = np.linalg.norm(structure_residual(S, StructureKind.SYMPLECTIC))
        assert residual <= 1e-12 * (1 + np.linalg.norm(S) ** 2)

        Y = generator.skew_hamiltonian(n)
        assert np.linalg.norm(structure_residual(Y, StructureKind.SKEW_HAMILTONIAN)) == 0.0

        c = generator.valid_channel(n)
        validity = validate_channel(c)
        assert validity.valid
        assert validity.min_eigenvalue > 0.0
        assert check_structure(c.alpha, StructureKind.SYMMETRIC).holds


def test_unknown_kind_is_rejected() -> None:
    with pytest.raises(ValueError):
        generate("orthogonal", 1, 0)
