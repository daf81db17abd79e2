import pytest

import mfaces


def test_cyclic_m_vector():
    k = mfaces.cyclic_boundary(5, 9)
    assert k.dim == 4
    assert mfaces.m_vector(k)[:3] == [0, 10, 6]


def test_gs8_certificate():
    cert = mfaces.certify(mfaces.gs8())
    assert cert["verdict"] == "NOT_POLYTOPAL"
    assert (cert["witness_vertex"], cert["observed"], cert["expected"]) == (4, 1, 3)


def test_p042_missing_faces():
    missing = mfaces.p042().missing_faces()
    assert len(missing) == 10 and all(len(f) == 3 for f in missing)


def test_octahedron_analysis():
    report = mfaces.analyze(mfaces.octahedron())
    assert report["flag"] == "true"
    assert report["m"] == "3,0,0"


def test_round_trip_text():
    text = mfaces.write_complex(mfaces.gs8())
    assert mfaces.write_complex(mfaces.read_complex(text)) == text


def test_flip_and_sphere_check():
    d1 = mfaces.cyclic_boundary(5, 10)
    d2 = mfaces.bistellar_flip(d1, [1, 3, 10])
    assert d2 == mfaces.delta_sequence(10)[1]
    ok, reason = mfaces.verify_sphere(d2, full=True)
    assert ok, reason


def test_family_step():
    seed = mfaces.family_seed(2)
    nxt = mfaces.family_step(seed["sigma"], seed["edges"], seed["k"])
    assert nxt["n"] == 10
    assert mfaces.neighborliness(nxt["sigma"]) == 2


def test_inadmissible_two_sphere():
    with pytest.raises(ValueError):
        mfaces.realize_2sphere(9, 4)


def test_bad_file_raises():
    with pytest.raises(ValueError):
        mfaces.read_complex("1 2 x\n")
