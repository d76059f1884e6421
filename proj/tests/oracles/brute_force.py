"""Independent brute-force oracle for frozen test values.

Builds Liouvillians with numpy Kronecker products, finds the steady state from
the SVD null vector, and forms the Drazin inverse from the Moore-Penrose
pseudo-inverse with the stationary projector removed. None of this shares code
with the C++ library.
"""
import numpy as np
from numpy.linalg import pinv, svd


def sandwich(a, b):
    return np.kron(b.T, a)


def liouvillian(h, ls):
    d = h.shape[0]
    eye = np.eye(d)
    out = -1j * (sandwich(h, eye) - sandwich(eye, h))
    for l in ls:
        ld = l.conj().T
        out += sandwich(l, ld) - 0.5 * sandwich(ld @ l, eye) - 0.5 * sandwich(eye, ld @ l)
    return out


def trace_row(d):
    return np.eye(d).reshape(-1, order="F")


def steady(lv, d):
    _, s, vh = svd(lv)
    v = vh.conj().T[:, -1]
    v = v / (trace_row(d) @ v)
    return v


def drazin(lv, rho, d):
    p = np.outer(rho, trace_row(d))
    q = np.eye(d * d) - p
    return q @ pinv(lv) @ q


def jump_stats(h, ls, nus):
    d = h.shape[0]
    lv = liouvillian(h, ls)
    rho = steady(lv, d)
    ld = drazin(lv, rho, d)
    tr = trace_row(d)
    jop = sum(nu * sandwich(l, l.conj().T) for l, nu in zip(ls, nus))
    hop = -1j * (sandwich(h, np.eye(d)) - sandwich(np.eye(d), h))
    J = (tr @ jop @ rho).real
    A = sum((tr @ sandwich(l, l.conj().T) @ rho).real for l in ls)
    D = sum(nu**2 * (tr @ sandwich(l, l.conj().T) @ rho).real for l, nu in zip(ls, nus)) \
        - 2 * (tr @ jop @ ld @ jop @ rho).real
    psi = (tr @ jop @ ld @ hop @ rho).real / J
    return dict(J=J, A=A, D=D, psi=psi, rho=rho.reshape(d, d, order="F"))


def diff_stats(h, ls, nus, phis):
    d = h.shape[0]
    eye = np.eye(d)
    lv = liouvillian(h, ls)
    rho = steady(lv, d)
    ld = drazin(lv, rho, d)
    tr = trace_row(d)
    jop = sum(nu * (np.exp(-1j * ph) * sandwich(l, eye) + np.exp(1j * ph) * sandwich(eye, l.conj().T))
              for l, nu, ph in zip(ls, nus, phis))
    hop = -1j * (sandwich(h, eye) - sandwich(eye, h))
    J = (tr @ jop @ rho).real
    A = sum((tr @ sandwich(l, l.conj().T) @ rho).real for l in ls)
    D = sum(nu**2 for nu in nus) - 2 * (tr @ jop @ ld @ jop @ rho).real
    psi = (tr @ jop @ ld @ hop @ rho).real / J
    return dict(J=J, A=A, D=D, psi=psi)


def chi_factor(h, ls):
    d = h.shape[0]
    eye = np.eye(d)
    lv = liouvillian(h, ls)
    rho = steady(lv, d)
    ld = drazin(lv, rho, d)
    tr = trace_row(d)
    kl = sandwich(-1j * h, eye)
    kr = sandwich(eye, 1j * h)
    for l in ls:
        ld_ = l.conj().T
        kl = kl + 0.5 * (sandwich(l, ld_) - sandwich(ld_ @ l, eye))
        kr = kr + 0.5 * (sandwich(l, ld_) - sandwich(eye, ld_ @ l))
    return (-4 * (tr @ kl @ ld @ kr @ rho + tr @ kr @ ld @ kl @ rho)).real


# ---- double quantum dot, basis {|00>,|10>,|01>,|11>} (index = nL + 2 nR)
def dqd_ops():
    cl = np.zeros((4, 4)); cr = np.zeros((4, 4))
    for nl in (0, 1):
        for nr in (0, 1):
            s = nl + 2 * nr
            if nl:
                cl[0 + 2 * nr, s] = 1.0
            if nr:
                cr[nl, s] = (-1.0) ** nl
    return cl, cr


def fermi(bmu):
    return 1.0 / (np.exp(-bmu) + 1.0)


def dqd(g, gl=1.0, gr=1.0, dep=0.0, fl=fermi(7.0), fr=fermi(-7.0), eps=0.0):
    cl, cr = dqd_ops()
    nl = cl.T @ cl; nr = cr.T @ cr
    h = eps * (nl + nr) + g * (cl.T @ cr + cr.T @ cl)
    ls = [np.sqrt(gl * fl) * cl.T, np.sqrt(gl * (1 - fl)) * cl,
          np.sqrt(gr * fr) * cr.T, np.sqrt(gr * (1 - fr)) * cr,
          np.sqrt(dep / 2) * (nl - nr)]
    return h, ls


def dqd_closed(g, gl=1.0, gr=1.0, G=0.0, fl=fermi(7.0), fr=fermi(-7.0)):
    s = gl + gr
    den = 4 * g**2 * s + gl * gr * (s + 2 * G)
    fb = (fl * gl + fr * gr) / s
    J = 4 * g**2 * (fl - fr) * gl * gr / den
    A = (8 * g**2 * s**2 * fb * (1 - fb + G / s)
         + gl * gr * (s + 2 * G) * (2 * gl * fl * (1 - fl) + 2 * gr * fr * (1 - fr) + G * (fl + fr))) / den
    D = (4 * g**2 * (fl + fr - 2 * fl * fr) * gl * gr / den
         + J * 32 * g**2 * (fl - fr) * gl * gr * (s + G) / (s * den)
         - 2 * J**2 * (4 * g**2 * s * (5 * gl + 5 * gr + 6 * G)
                       + 2 * (s + 2 * G) * (2 * G * (gl**2 + 3 * gl * gr + gr**2) + s * (gl**2 + 7 * gl * gr + gr**2)))
         / (s * den))
    Dcl = (4 * g**2 * (fl + fr - 2 * fl * fr) * gl * gr / den
           + J * 16 * g**2 * (fl - fr) * gl * gr / den
           - 2 * J**2 * (12 * g**2 * s + (s + 2 * G) * (gl**2 + 3 * gl * gr + gr**2)) / (s * den))
    psi = -2 * gl * gr * (s + 2 * G) / den
    psid = 8 * g**2 * s / den
    Jd = np.sqrt(2 * G) * (fl - fr) * gl * gr * (s + 2 * G) / den
    alpha = 2j * g * (fl - fr) * gl * gr / den
    C = 2 * g * abs(fl - fr) / (s + G) * abs(psi)
    p0 = (4 * g**2 * (1 - fb)**2 * s + (1 - fl) * (1 - fr) * gl * gr * (s + 2 * G)) / den
    pD = (4 * g**2 * fb**2 * s + fl * fr * gl * gr * (s + 2 * G)) / den
    pL = (4 * g**2 * fb * (1 - fb) * s + fl * (1 - fr) * gl * gr * (s + 2 * G)) / den
    pR = (4 * g**2 * fb * (1 - fb) * s + (1 - fl) * fr * gl * gr * (s + 2 * G)) / den
    psi_in = (8 * g**2 * (fl - fr) * gl * gr**2) / ((4 * g**2 + gl * gr) * ((fl - 1) * gl * gr * (gl + gr)
                                                   + 4 * g**2 * ((fl - 1) * gl + (fr - 1) * gr)))
    return dict(J=J, A=A, D=D, Dcl=Dcl, psi=psi, psid=psid, Jd=Jd, alpha=alpha, C=C,
                p=(p0, pL, pR, pD), psi_in=psi_in)


def classical_dqd(g, gl=1.0, gr=1.0, G=0.0, fl=fermi(7.0), fr=fermi(-7.0)):
    w = 4 * g**2 / (gl + gr + 2 * G)
    W = np.array([
        [-fl * gl - fr * gr, (1 - fl) * gl, (1 - fr) * gr, 0],
        [fl * gl, -(1 - fl) * gl - fr * gr - w, w, (1 - fr) * gr],
        [fr * gr, w, -fl * gl - (1 - fr) * gr - w, (1 - fl) * gl],
        [0, fr * gr, fl * gl, -(1 - fl) * gl - (1 - fr) * gr]])
    nu = np.zeros((4, 4)); nu[1, 0] = 1; nu[3, 2] = 1; nu[0, 1] = -1; nu[2, 3] = -1
    _, _, vh = svd(W)
    p = vh[-1]; p = p / p.sum()
    ones = np.ones(4)
    q = np.eye(4) - np.outer(p, ones)
    wd = q @ pinv(W) @ q
    jm = nu * W
    J = ones @ jm @ p
    D = ones @ (nu**2 * W) @ p - 2 * ones @ jm @ wd @ jm @ p
    Acl = sum(W[k, j] * p[j] for k in range(4) for j in range(4) if k != j)
    return dict(J=J, D=D, Acl=Acl, p=p, W=W)


def qubit(kappa, nbar, delta, omega):
    sm = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|
    sp = sm.conj().T
    sz = np.diag([-1.0, 1.0])
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    h = delta / 2 * sz + omega * sx
    ls = [np.sqrt(kappa * nbar) * sp, np.sqrt(kappa * (nbar + 1)) * sm]
    return h, ls


def qubit_closed(k, n, dl, om):
    Q = k**2 * (1 + 2 * n)**2 + 4 * (dl**2 + 2 * om**2)
    r00 = ((1 + n) * (Q - 8 * om**2) + 4 * (1 + 2 * n) * om**2) / ((1 + 2 * n) * Q)
    r11 = (n * (Q - 8 * om**2) + 4 * (1 + 2 * n) * om**2) / ((1 + 2 * n) * Q)
    r10 = 2 * (-1j * k * (1 + 2 * n) - 2 * dl) * om / ((1 + 2 * n) * Q)
    J = 4 * k * om**2 / Q
    A = (2 * k * n * (1 + n) * (Q - 8 * om**2) + 4 * k * (1 + 2 * n)**2 * om**2) / ((1 + 2 * n) * Q)
    D = A - 2 * k * (n * (1 + n) * (Q - 8 * om**2)**3 + 16 * n * (1 + n) * (Q - 8 * om**2)**2 * om**2
                     + 16 * (k**2 * (1 + 2 * n)**2 * (3 + 4 * n * (1 + n)) + 4 * (-1 + 4 * n * (1 + n)) * dl**2) * om**4) \
        / ((1 + 2 * n) * Q**3)
    psi = -2 * k**2 * (1 + 2 * n)**2 / Q
    Jd = 4 * k * om * (np.sqrt(k * n) + np.sqrt(k * (1 + n))) / Q
    psid = (Q - 2 * k**2 * (1 + 2 * n)**2) / Q
    Dcl = 4 * k * om**2 * ((k**2 * (1 + 2 * n)**3 + 4 * (1 + 2 * n) * dl**2)**2
                           + 8 * (1 + 8 * n * (1 + n)) * (k**2 * (1 + 2 * n)**2 + 4 * dl**2) * om**2
                           + 64 * (1 + 2 * n)**2 * om**4) / ((1 + 2 * n) * Q**3)
    return dict(r00=r00, r11=r11, r10=r10, J=J, A=A, D=D, psi=psi, Jd=Jd, psid=psid, Dcl=Dcl)


if __name__ == "__main__":
    np.set_printoptions(precision=17)
    for g, G in [(1.0, 0.0), (1.0, 0.3), (1.0, 1.0), (0.1, 0.0), (0.37, 0.3), (5.0, 1.0)]:
        h, ls = dqd(g, dep=G)
        nj = jump_stats(h, ls, [1, -1, 0, 0, 0])
        cf = dqd_closed(g, G=G)
        print(f"DQD g={g} G={G}")
        print("  J", nj["J"], cf["J"], " A", nj["A"], cf["A"])
        print("  D", nj["D"], cf["D"], " psi", nj["psi"], cf["psi"])
        print("  rho diag", np.diag(nj["rho"]).real, cf["p"])
        print("  alpha", nj["rho"][1, 2], cf["alpha"])
        print("  chi", chi_factor(h, ls))
        if G > 0:
            dd = diff_stats(h, ls, [0, 0, 0, 0, 1], [0, 0, 0, 0, 0])
            print("  diff J", dd["J"], cf["Jd"], " psi", dd["psi"], cf["psid"], " D", dd["D"])
        cl = classical_dqd(g, G=G)
        print("  classical J", cl["J"], " D", cl["D"], cf["Dcl"], " Acl", cl["Acl"],
              cf["A"] + (4 * g**2 / (2 + 2 * G) - G / 2) * (cf["p"][1] + cf["p"][2]))
        if G == 0:
            ni = jump_stats(h, ls, [1, 0, 0, 0, 0])
            print("  in-only psi", ni["psi"], cf["psi_in"])
    for k, n, dl, om in [(1, 0, 0, 1), (1, 1, 1, 0.3), (1, 0.5, 0.7, 2.0)]:
        h, ls = qubit(k, n, dl, om)
        nj = jump_stats(h, ls, [-1, 1])
        dd = diff_stats(h, ls, [-1, 1], [np.pi / 2, np.pi / 2])
        cf = qubit_closed(k, n, dl, om)
        print(f"QUBIT {k} {n} {dl} {om}")
        print("  rho", nj["rho"][0, 0].real, cf["r00"], nj["rho"][1, 0], cf["r10"])
        print("  J", nj["J"], cf["J"], " A", nj["A"], cf["A"], " D", nj["D"], cf["D"])
        print("  psi", nj["psi"], cf["psi"], " Jd", dd["J"], cf["Jd"], " psid", dd["psi"], cf["psid"])
        print("  chi", chi_factor(h, ls))
