# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: multi-start Newton for closest-approach roots and
branch points. Mirrors the signatures of ``_ca_py``."""

import numpy as np

from libc.math cimport NAN

cdef extern from "complex.h" nogil:
    double complex csin(double complex)
    double complex ccos(double complex)
    double cabs(double complex)

BACKEND = "cython"


def ca_newton(seeds, double px, double pz, double complex ts,
              double F, double omega, double tol=1e-12, int maxiter=60):
    cdef double complex[::1] t = np.array(seeds, dtype=np.complex128)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i
    cdef int it
    cdef double complex ti, dt, z, vz, f, df
    cdef double complex cos_ts = ccos(omega * ts)
    cdef double px2 = px * px
    cdef double Fw2 = F / (omega * omega)
    cdef double Fw = F / omega
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            ti = t[i]
            for it in range(maxiter):
                dt = ti - ts
                z = pz * dt + Fw2 * (ccos(omega * ti) - cos_ts)
                vz = pz - Fw * csin(omega * ti)
                f = px2 * dt + z * vz
                if cabs(f) < tol:
                    break
                df = px2 + vz * vz - z * F * ccos(omega * ti)
                if df == 0:
                    break
                ti = ti - f / df
            dt = ti - ts
            z = pz * dt + Fw2 * (ccos(omega * ti) - cos_ts)
            vz = pz - Fw * csin(omega * ti)
            f = px2 * dt + z * vz
            if cabs(f) < tol:
                o[i] = ti
            else:
                o[i] = NAN + 1j * NAN
    return out


def branch_newton(seeds, int sign, double px, double pz, double complex ts,
                  double F, double omega, double tol=1e-13, int maxiter=60):
    cdef double complex[::1] t = np.array(seeds, dtype=np.complex128)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i
    cdef int it
    cdef double complex ti, dt, z, g, dg
    cdef double complex cos_ts = ccos(omega * ts)
    cdef double complex c = 1j * sign * px
    cdef double Fw2 = F / (omega * omega)
    cdef double Fw = F / omega
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            ti = t[i]
            for it in range(maxiter):
                dt = ti - ts
                z = pz * dt + Fw2 * (ccos(omega * ti) - cos_ts)
                g = z - c * dt
                if cabs(g) < tol:
                    break
                dg = pz - Fw * csin(omega * ti) - c
                if dg == 0:
                    break
                ti = ti - g / dg
            dt = ti - ts
            z = pz * dt + Fw2 * (ccos(omega * ti) - cos_ts)
            g = z - c * dt
            if cabs(g) < tol:
                o[i] = ti
            else:
                o[i] = NAN + 1j * NAN
    return out
