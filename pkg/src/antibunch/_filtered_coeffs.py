"""Amplitudes of the seven-exponential filtered-coherent g2.

Machine-generated by tools/emit_coeffs.py from the symbolic moment
hierarchy of the emitter + sensor-mode system; do not edit by hand.

``terms(G, W, gm)`` returns the seven ``(amplitude, rate)`` pairs of

    g2(tau) = 1 + sum_k amplitude_k * exp(-rate_k * tau)

in units of the emitter decay rate (G = Gamma/gamma, W = Omega/gamma,
gm = sqrt(1 - 64 W**2), continued to the imaginary axis for W > 1/8).
Rates: (3 + gm)/4, (3 - gm)/4, G/2, (G + 1)/2, (2G + 3 + gm)/4,
(2G + 3 - gm)/4, G.  The amplitudes are rational in (G, W, gm) and have
poles where rates collide; callers detect the blow-up and fall back to
the Liouvillian oracle there.
"""


def terms(G, W, gm):
    W2 = W * W
    a1 = (1024*G**12*W2*gm**2 - 2048*G**12*W2*gm - 3072*G**12*W2 + 147456*G**11*W2**2*gm - 311296*G**11*W2**2 + 6656*G**11*W2*gm**2 - 9216*G**11*W2*gm - 15872*G**11*W2 + 3670016*G**10*W2**3 - 36864*G**10*W2**2*gm**2 + 1228800*G**10*W2**2*gm - 2306048*G**10*W2**2 + 11264*G**10*W2*gm**2 - 4096*G**10*W2*gm - 15360*G**10*W2 + 589824*G**9*W2**3*gm + 18415616*G**9*W2**3 - 466944*G**9*W2**2*gm**2 + 4374528*G**9*W2**2*gm - 6135808*G**9*W2**2 - 14336*G**9*W2*gm**2 + 36864*G**9*W2*gm + 51200*G**9*W2 + 56623104*G**8*W2**4 - 1081344*G**8*W2**3*gm**2 - 3014656*G**8*W2**3*gm + 39485440*G**8*W2**3 - 2048000*G**8*W2**2*gm**2 + 8011776*G**8*W2**2*gm - 6258688*G**8*W2**2 - 67584*G**8*W2*gm**2 + 61440*G**8*W2*gm + 129024*G**8*W2 - 37748736*G**7*W2**4*gm + 119537664*G**7*W2**4 - 6684672*G**7*W2**3*gm**2 - 30081024*G**7*W2**3*gm + 57344000*G**7*W2**3 - 4243456*G**7*W2**2*gm**2 + 7127040*G**7*W2**2*gm + 1146880*G**7*W2**2 - 66048*G**7*W2*gm**2 + 9216*G**7*W2*gm + 75264*G**7*W2 - 100663296*G**6*W2**5 - 3670016*G**6*W2**4*gm**2 - 208666624*G**6*W2**4*gm - 98041856*G**6*W2**4 - 13598720*G**6*W2**3*gm**2 - 80740352*G**6*W2**3*gm + 61308928*G**6*W2**3 - 4452352*G**6*W2**2*gm**2 + 1671168*G**6*W2**2*gm + 8187904*G**6*W2**2 + 14336*G**6*W2*gm**2 - 47104*G**6*W2*gm - 61440*G**6*W2 - 150994944*G**5*W2**5*gm - 1426063360*G**5*W2**5 - 2621440*G**5*W2**4*gm**2 - 368050176*G**5*W2**4*gm - 531103744*G**5*W2**4 - 10813440*G**5*W2**3*gm**2 - 95682560*G**5*W2**3*gm + 44105728*G**5*W2**3 - 2154496*G**5*W2**2*gm**2 - 1720320*G**5*W2**2*gm + 7282688*G**5*W2**2 + 65536*G**5*W2*gm**2 - 36864*G**5*W2*gm - 102400*G**5*W2 - 1073741824*G**4*W2**6 - 117440512*G**4*W2**5*gm - 2499805184*G**4*W2**5 + 8388608*G**4*W2**4*gm**2 - 247463936*G**4*W2**4*gm - 595591168*G**4*W2**4 - 2293760*G**4*W2**3*gm**2 - 52166656*G**4*W2**3*gm + 24051712*G**4*W2**3 - 163840*G**4*W2**2*gm**2 - 1179648*G**4*W2**2*gm + 2654208*G**4*W2**2 + 40960*G**4*W2*gm**2 - 8192*G**4*W2*gm - 49152*G**4*W2 - 1073741824*G**3*W2**6 + 100663296*G**3*W2**5*gm - 1644167168*G**3*W2**5 + 5242880*G**3*W2**4*gm**2 - 46137344*G**3*W2**4*gm - 252706816*G**3*W2**4 + 786432*G**3*W2**3*gm**2 - 11272192*G**3*W2**3*gm + 12058624*G**3*W2**3 + 229376*G**3*W2**2*gm**2 - 196608*G**3*W2**2*gm + 229376*G**3*W2**2 + 8192*G**3*W2*gm**2 - 8192*G**3*W2 + 67108864*G**2*W2**5*gm - 469762048*G**2*W2**5 - 2097152*G**2*W2**4*gm**2 + 4194304*G**2*W2**4*gm - 27262976*G**2*W2**4 + 262144*G**2*W2**3*gm**2 - 524288*G**2*W2**3*gm + 3407872*G**2*W2**3 + 65536*G**2*W2**2*gm**2 - 65536*G**2*W2**2) / (32*G**12*gm**4 + 32*G**12*gm**3 - 32*G**12*gm**2 - 32*G**12*gm - 72*G**11*gm**5 + 144*G**11*gm**4 + 288*G**11*gm**3 - 144*G**11*gm**2 - 216*G**11*gm + 640*G**10*W2*gm**4 + 640*G**10*W2*gm**3 - 640*G**10*W2*gm**2 - 640*G**10*W2*gm + 56*G**10*gm**6 - 468*G**10*gm**5 - 112*G**10*gm**4 + 936*G**10*gm**3 + 56*G**10*gm**2 - 468*G**10*gm - 1440*G**9*W2*gm**5 + 640*G**9*W2*gm**4 + 3520*G**9*W2*gm**3 - 640*G**9*W2*gm**2 - 2080*G**9*W2*gm - 18*G**9*gm**7 + 428*G**9*gm**6 - 890*G**9*gm**5 - 1720*G**9*gm**4 + 970*G**9*gm**3 + 1292*G**9*gm**2 - 62*G**9*gm + 4096*G**8*W2**2*gm**4 + 4096*G**8*W2**2*gm**3 - 4096*G**8*W2**2*gm**2 - 4096*G**8*W2**2*gm + 1120*G**8*W2*gm**6 - 4320*G**8*W2*gm**5 - 6464*G**8*W2*gm**4 + 4416*G**8*W2*gm**3 + 5344*G**8*W2*gm**2 - 96*G**8*W2*gm + 2*G**8*gm**8 - 155*G**8*gm**7 + 1210*G**8*gm**6 + 469*G**8*gm**5 - 3482*G**8*gm**4 - 1529*G**8*gm**3 + 2270*G**8*gm**2 + 1215*G**8*gm - 9216*G**7*W2**2*gm**5 - 9216*G**7*W2**2*gm**4 + 9216*G**7*W2**2*gm**3 + 9216*G**7*W2**2*gm**2 - 360*G**7*W2*gm**7 + 4640*G**7*W2*gm**6 + 1784*G**7*W2*gm**5 - 13760*G**7*W2*gm**4 - 6968*G**7*W2*gm**3 + 9120*G**7*W2*gm**2 + 5544*G**7*W2*gm + 19*G**7*gm**8 - 541*G**7*gm**7 + 1267*G**7*gm**6 + 3911*G**7*gm**5 - 1439*G**7*gm**4 - 5047*G**7*gm**3 + 153*G**7*gm**2 + 1677*G**7*gm + 8192*G**6*W2**3*gm**4 + 8192*G**6*W2**3*gm**3 - 8192*G**6*W2**3*gm**2 - 8192*G**6*W2**3*gm + 7168*G**6*W2**2*gm**6 + 2304*G**6*W2**2*gm**5 - 22528*G**6*W2**2*gm**4 - 12800*G**6*W2**2*gm**3 + 15360*G**6*W2**2*gm**2 + 10496*G**6*W2**2*gm + 40*G**6*W2*gm**8 - 1840*G**6*W2*gm**7 + 4488*G**6*W2*gm**6 + 16528*G**6*W2*gm**5 - 1288*G**6*W2*gm**4 - 19728*G**6*W2*gm**3 - 3240*G**6*W2*gm**2 + 5040*G**6*W2*gm + 77*G**6*gm**8 - 950*G**6*gm**7 - 711*G**6*gm**6 + 4910*G**6*gm**5 + 3911*G**6*gm**4 - 4250*G**6*gm**3 - 3277*G**6*gm**2 + 290*G**6*gm - 18432*G**5*W2**3*gm**5 - 40960*G**5*W2**3*gm**4 - 4096*G**5*W2**3*gm**3 + 40960*G**5*W2**3*gm**2 + 22528*G**5*W2**3*gm - 2304*G**5*W2**2*gm**7 + 6400*G**5*W2**2*gm**6 + 28928*G**5*W2**2*gm**5 + 7680*G**5*W2**2*gm**4 - 30464*G**5*W2**2*gm**3 - 14080*G**5*W2**2*gm**2 + 3840*G**5*W2**2*gm + 240*G**5*W2*gm**8 - 3264*G**5*W2*gm**7 - 4752*G**5*W2*gm**6 + 14496*G**5*W2*gm**5 + 18384*G**5*W2*gm**4 - 9600*G**5*W2*gm**3 - 13872*G**5*W2*gm**2 - 1632*G**5*W2*gm + 174*G**5*gm**8 - 768*G**5*gm**7 - 3030*G**5*gm**6 + 816*G**5*gm**5 + 5826*G**5*gm**4 + 960*G**5*gm**3 - 2970*G**5*gm**2 - 1008*G**5*gm + 14336*G**4*W2**3*gm**6 + 55296*G**4*W2**3*gm**5 + 45056*G**4*W2**3*gm**4 - 36864*G**4*W2**3*gm**3 - 59392*G**4*W2**3*gm**2 - 18432*G**4*W2**3*gm + 256*G**4*W2**2*gm**8 - 4288*G**4*W2**2*gm**7 - 11520*G**4*W2**2*gm**6 + 11072*G**4*W2**2*gm**5 + 32512*G**4*W2**2*gm**4 + 960*G**4*W2**2*gm**3 - 21248*G**4*W2**2*gm**2 - 7744*G**4*W2**2*gm + 576*G**4*W2*gm**8 - 1872*G**4*W2*gm**7 - 11232*G**4*W2*gm**6 - 4464*G**4*W2*gm**5 + 16256*G**4*W2*gm**4 + 10064*G**4*W2*gm**3 - 5600*G**4*W2*gm**2 - 3728*G**4*W2*gm + 240*G**4*gm**8 + 57*G**4*gm**7 - 2672*G**4*gm**6 - 3135*G**4*gm**5 + 2320*G**4*gm**4 + 3795*G**4*gm**3 + 112*G**4*gm**2 - 717*G**4*gm - 4608*G**3*W2**3*gm**7 - 26624*G**3*W2**3*gm**6 - 43520*G**3*W2**3*gm**5 - 4096*G**3*W2**3*gm**4 + 43520*G**3*W2**3*gm**3 + 30720*G**3*W2**3*gm**2 + 4608*G**3*W2**3*gm + 704*G**3*W2**2*gm**8 - 704*G**3*W2**2*gm**7 - 14656*G**3*W2**2*gm**6 - 20928*G**3*W2**2*gm**5 + 7744*G**3*W2**2*gm**4 + 24512*G**3*W2**2*gm**3 + 6208*G**3*W2**2*gm**2 - 2880*G**3*W2**2*gm + 720*G**3*W2*gm**8 + 1224*G**3*W2*gm**7 - 5712*G**3*W2*gm**6 - 11736*G**3*W2*gm**5 + 944*G**3*W2*gm**4 + 11480*G**3*W2*gm**3 + 4048*G**3*W2*gm**2 - 968*G**3*W2*gm + 207*G**3*gm**8 + 675*G**3*gm**7 - 425*G**3*gm**6 - 2641*G**3*gm**5 - 1067*G**3*gm**4 + 1961*G**3*gm**3 + 1285*G**3*gm**2 + 5*G**3*gm + 512*G**2*W2**3*gm**8 + 4096*G**2*W2**3*gm**7 + 10752*G**2*W2**3*gm**6 + 8192*G**2*W2**3*gm**5 - 6656*G**2*W2**3*gm**4 - 12288*G**2*W2**3*gm**3 - 4608*G**2*W2**3*gm**2 + 704*G**2*W2**2*gm**8 + 3328*G**2*W2**2*gm**7 + 1472*G**2*W2**2*gm**6 - 10496*G**2*W2**2*gm**5 - 11200*G**2*W2**2*gm**4 + 4864*G**2*W2**2*gm**3 + 9024*G**2*W2**2*gm**2 + 2304*G**2*W2**2*gm + 504*G**2*W2*gm**8 + 2304*G**2*W2*gm**7 + 1496*G**2*W2*gm**6 - 4800*G**2*W2*gm**5 - 5272*G**2*W2*gm**4 + 1920*G**2*W2*gm**3 + 3272*G**2*W2*gm**2 + 576*G**2*W2*gm + 109*G**2*gm**8 + 584*G**2*gm**7 + 737*G**2*gm**6 - 544*G**2*gm**5 - 1321*G**2*gm**4 - 184*G**2*gm**3 + 475*G**2*gm**2 + 144*G**2*gm + 256*G*W2**2*gm**8 + 2048*G*W2**2*gm**7 + 5376*G*W2**2*gm**6 + 4096*G*W2**2*gm**5 - 3328*G*W2**2*gm**4 - 6144*G*W2**2*gm**3 - 2304*G*W2**2*gm**2 + 192*G*W2*gm**8 + 1248*G*W2*gm**7 + 2368*G*W2*gm**6 + 352*G*W2*gm**5 - 2752*G*W2*gm**4 - 1888*G*W2*gm**3 + 192*G*W2*gm**2 + 288*G*W2*gm + 32*G*gm**8 + 220*G*gm**7 + 464*G*gm**6 + 172*G*gm**5 - 448*G*gm**4 - 428*G*gm**3 - 48*G*gm**2 + 36*G*gm + 32*W2*gm**8 + 256*W2*gm**7 + 672*W2*gm**6 + 512*W2*gm**5 - 416*W2*gm**4 - 768*W2*gm**3 - 288*W2*gm**2 + 4*gm**8 + 32*gm**7 + 84*gm**6 + 64*gm**5 - 52*gm**4 - 96*gm**3 - 36*gm**2)
    a2 = (-1024*G**12*W2*gm**2 - 2048*G**12*W2*gm + 3072*G**12*W2 + 147456*G**11*W2**2*gm + 311296*G**11*W2**2 - 6656*G**11*W2*gm**2 - 9216*G**11*W2*gm + 15872*G**11*W2 - 3670016*G**10*W2**3 + 36864*G**10*W2**2*gm**2 + 1228800*G**10*W2**2*gm + 2306048*G**10*W2**2 - 11264*G**10*W2*gm**2 - 4096*G**10*W2*gm + 15360*G**10*W2 + 589824*G**9*W2**3*gm - 18415616*G**9*W2**3 + 466944*G**9*W2**2*gm**2 + 4374528*G**9*W2**2*gm + 6135808*G**9*W2**2 + 14336*G**9*W2*gm**2 + 36864*G**9*W2*gm - 51200*G**9*W2 - 56623104*G**8*W2**4 + 1081344*G**8*W2**3*gm**2 - 3014656*G**8*W2**3*gm - 39485440*G**8*W2**3 + 2048000*G**8*W2**2*gm**2 + 8011776*G**8*W2**2*gm + 6258688*G**8*W2**2 + 67584*G**8*W2*gm**2 + 61440*G**8*W2*gm - 129024*G**8*W2 - 37748736*G**7*W2**4*gm - 119537664*G**7*W2**4 + 6684672*G**7*W2**3*gm**2 - 30081024*G**7*W2**3*gm - 57344000*G**7*W2**3 + 4243456*G**7*W2**2*gm**2 + 7127040*G**7*W2**2*gm - 1146880*G**7*W2**2 + 66048*G**7*W2*gm**2 + 9216*G**7*W2*gm - 75264*G**7*W2 + 100663296*G**6*W2**5 + 3670016*G**6*W2**4*gm**2 - 208666624*G**6*W2**4*gm + 98041856*G**6*W2**4 + 13598720*G**6*W2**3*gm**2 - 80740352*G**6*W2**3*gm - 61308928*G**6*W2**3 + 4452352*G**6*W2**2*gm**2 + 1671168*G**6*W2**2*gm - 8187904*G**6*W2**2 - 14336*G**6*W2*gm**2 - 47104*G**6*W2*gm + 61440*G**6*W2 - 150994944*G**5*W2**5*gm + 1426063360*G**5*W2**5 + 2621440*G**5*W2**4*gm**2 - 368050176*G**5*W2**4*gm + 531103744*G**5*W2**4 + 10813440*G**5*W2**3*gm**2 - 95682560*G**5*W2**3*gm - 44105728*G**5*W2**3 + 2154496*G**5*W2**2*gm**2 - 1720320*G**5*W2**2*gm - 7282688*G**5*W2**2 - 65536*G**5*W2*gm**2 - 36864*G**5*W2*gm + 102400*G**5*W2 + 1073741824*G**4*W2**6 - 117440512*G**4*W2**5*gm + 2499805184*G**4*W2**5 - 8388608*G**4*W2**4*gm**2 - 247463936*G**4*W2**4*gm + 595591168*G**4*W2**4 + 2293760*G**4*W2**3*gm**2 - 52166656*G**4*W2**3*gm - 24051712*G**4*W2**3 + 163840*G**4*W2**2*gm**2 - 1179648*G**4*W2**2*gm - 2654208*G**4*W2**2 - 40960*G**4*W2*gm**2 - 8192*G**4*W2*gm + 49152*G**4*W2 + 1073741824*G**3*W2**6 + 100663296*G**3*W2**5*gm + 1644167168*G**3*W2**5 - 5242880*G**3*W2**4*gm**2 - 46137344*G**3*W2**4*gm + 252706816*G**3*W2**4 - 786432*G**3*W2**3*gm**2 - 11272192*G**3*W2**3*gm - 12058624*G**3*W2**3 - 229376*G**3*W2**2*gm**2 - 196608*G**3*W2**2*gm - 229376*G**3*W2**2 - 8192*G**3*W2*gm**2 + 8192*G**3*W2 + 67108864*G**2*W2**5*gm + 469762048*G**2*W2**5 + 2097152*G**2*W2**4*gm**2 + 4194304*G**2*W2**4*gm + 27262976*G**2*W2**4 - 262144*G**2*W2**3*gm**2 - 524288*G**2*W2**3*gm - 3407872*G**2*W2**3 - 65536*G**2*W2**2*gm**2 + 65536*G**2*W2**2) / (-32*G**12*gm**4 + 32*G**12*gm**3 + 32*G**12*gm**2 - 32*G**12*gm - 72*G**11*gm**5 - 144*G**11*gm**4 + 288*G**11*gm**3 + 144*G**11*gm**2 - 216*G**11*gm - 640*G**10*W2*gm**4 + 640*G**10*W2*gm**3 + 640*G**10*W2*gm**2 - 640*G**10*W2*gm - 56*G**10*gm**6 - 468*G**10*gm**5 + 112*G**10*gm**4 + 936*G**10*gm**3 - 56*G**10*gm**2 - 468*G**10*gm - 1440*G**9*W2*gm**5 - 640*G**9*W2*gm**4 + 3520*G**9*W2*gm**3 + 640*G**9*W2*gm**2 - 2080*G**9*W2*gm - 18*G**9*gm**7 - 428*G**9*gm**6 - 890*G**9*gm**5 + 1720*G**9*gm**4 + 970*G**9*gm**3 - 1292*G**9*gm**2 - 62*G**9*gm - 4096*G**8*W2**2*gm**4 + 4096*G**8*W2**2*gm**3 + 4096*G**8*W2**2*gm**2 - 4096*G**8*W2**2*gm - 1120*G**8*W2*gm**6 - 4320*G**8*W2*gm**5 + 6464*G**8*W2*gm**4 + 4416*G**8*W2*gm**3 - 5344*G**8*W2*gm**2 - 96*G**8*W2*gm - 2*G**8*gm**8 - 155*G**8*gm**7 - 1210*G**8*gm**6 + 469*G**8*gm**5 + 3482*G**8*gm**4 - 1529*G**8*gm**3 - 2270*G**8*gm**2 + 1215*G**8*gm - 9216*G**7*W2**2*gm**5 + 9216*G**7*W2**2*gm**4 + 9216*G**7*W2**2*gm**3 - 9216*G**7*W2**2*gm**2 - 360*G**7*W2*gm**7 - 4640*G**7*W2*gm**6 + 1784*G**7*W2*gm**5 + 13760*G**7*W2*gm**4 - 6968*G**7*W2*gm**3 - 9120*G**7*W2*gm**2 + 5544*G**7*W2*gm - 19*G**7*gm**8 - 541*G**7*gm**7 - 1267*G**7*gm**6 + 3911*G**7*gm**5 + 1439*G**7*gm**4 - 5047*G**7*gm**3 - 153*G**7*gm**2 + 1677*G**7*gm - 8192*G**6*W2**3*gm**4 + 8192*G**6*W2**3*gm**3 + 8192*G**6*W2**3*gm**2 - 8192*G**6*W2**3*gm - 7168*G**6*W2**2*gm**6 + 2304*G**6*W2**2*gm**5 + 22528*G**6*W2**2*gm**4 - 12800*G**6*W2**2*gm**3 - 15360*G**6*W2**2*gm**2 + 10496*G**6*W2**2*gm - 40*G**6*W2*gm**8 - 1840*G**6*W2*gm**7 - 4488*G**6*W2*gm**6 + 16528*G**6*W2*gm**5 + 1288*G**6*W2*gm**4 - 19728*G**6*W2*gm**3 + 3240*G**6*W2*gm**2 + 5040*G**6*W2*gm - 77*G**6*gm**8 - 950*G**6*gm**7 + 711*G**6*gm**6 + 4910*G**6*gm**5 - 3911*G**6*gm**4 - 4250*G**6*gm**3 + 3277*G**6*gm**2 + 290*G**6*gm - 18432*G**5*W2**3*gm**5 + 40960*G**5*W2**3*gm**4 - 4096*G**5*W2**3*gm**3 - 40960*G**5*W2**3*gm**2 + 22528*G**5*W2**3*gm - 2304*G**5*W2**2*gm**7 - 6400*G**5*W2**2*gm**6 + 28928*G**5*W2**2*gm**5 - 7680*G**5*W2**2*gm**4 - 30464*G**5*W2**2*gm**3 + 14080*G**5*W2**2*gm**2 + 3840*G**5*W2**2*gm - 240*G**5*W2*gm**8 - 3264*G**5*W2*gm**7 + 4752*G**5*W2*gm**6 + 14496*G**5*W2*gm**5 - 18384*G**5*W2*gm**4 - 9600*G**5*W2*gm**3 + 13872*G**5*W2*gm**2 - 1632*G**5*W2*gm - 174*G**5*gm**8 - 768*G**5*gm**7 + 3030*G**5*gm**6 + 816*G**5*gm**5 - 5826*G**5*gm**4 + 960*G**5*gm**3 + 2970*G**5*gm**2 - 1008*G**5*gm - 14336*G**4*W2**3*gm**6 + 55296*G**4*W2**3*gm**5 - 45056*G**4*W2**3*gm**4 - 36864*G**4*W2**3*gm**3 + 59392*G**4*W2**3*gm**2 - 18432*G**4*W2**3*gm - 256*G**4*W2**2*gm**8 - 4288*G**4*W2**2*gm**7 + 11520*G**4*W2**2*gm**6 + 11072*G**4*W2**2*gm**5 - 32512*G**4*W2**2*gm**4 + 960*G**4*W2**2*gm**3 + 21248*G**4*W2**2*gm**2 - 7744*G**4*W2**2*gm - 576*G**4*W2*gm**8 - 1872*G**4*W2*gm**7 + 11232*G**4*W2*gm**6 - 4464*G**4*W2*gm**5 - 16256*G**4*W2*gm**4 + 10064*G**4*W2*gm**3 + 5600*G**4*W2*gm**2 - 3728*G**4*W2*gm - 240*G**4*gm**8 + 57*G**4*gm**7 + 2672*G**4*gm**6 - 3135*G**4*gm**5 - 2320*G**4*gm**4 + 3795*G**4*gm**3 - 112*G**4*gm**2 - 717*G**4*gm - 4608*G**3*W2**3*gm**7 + 26624*G**3*W2**3*gm**6 - 43520*G**3*W2**3*gm**5 + 4096*G**3*W2**3*gm**4 + 43520*G**3*W2**3*gm**3 - 30720*G**3*W2**3*gm**2 + 4608*G**3*W2**3*gm - 704*G**3*W2**2*gm**8 - 704*G**3*W2**2*gm**7 + 14656*G**3*W2**2*gm**6 - 20928*G**3*W2**2*gm**5 - 7744*G**3*W2**2*gm**4 + 24512*G**3*W2**2*gm**3 - 6208*G**3*W2**2*gm**2 - 2880*G**3*W2**2*gm - 720*G**3*W2*gm**8 + 1224*G**3*W2*gm**7 + 5712*G**3*W2*gm**6 - 11736*G**3*W2*gm**5 - 944*G**3*W2*gm**4 + 11480*G**3*W2*gm**3 - 4048*G**3*W2*gm**2 - 968*G**3*W2*gm - 207*G**3*gm**8 + 675*G**3*gm**7 + 425*G**3*gm**6 - 2641*G**3*gm**5 + 1067*G**3*gm**4 + 1961*G**3*gm**3 - 1285*G**3*gm**2 + 5*G**3*gm - 512*G**2*W2**3*gm**8 + 4096*G**2*W2**3*gm**7 - 10752*G**2*W2**3*gm**6 + 8192*G**2*W2**3*gm**5 + 6656*G**2*W2**3*gm**4 - 12288*G**2*W2**3*gm**3 + 4608*G**2*W2**3*gm**2 - 704*G**2*W2**2*gm**8 + 3328*G**2*W2**2*gm**7 - 1472*G**2*W2**2*gm**6 - 10496*G**2*W2**2*gm**5 + 11200*G**2*W2**2*gm**4 + 4864*G**2*W2**2*gm**3 - 9024*G**2*W2**2*gm**2 + 2304*G**2*W2**2*gm - 504*G**2*W2*gm**8 + 2304*G**2*W2*gm**7 - 1496*G**2*W2*gm**6 - 4800*G**2*W2*gm**5 + 5272*G**2*W2*gm**4 + 1920*G**2*W2*gm**3 - 3272*G**2*W2*gm**2 + 576*G**2*W2*gm - 109*G**2*gm**8 + 584*G**2*gm**7 - 737*G**2*gm**6 - 544*G**2*gm**5 + 1321*G**2*gm**4 - 184*G**2*gm**3 - 475*G**2*gm**2 + 144*G**2*gm - 256*G*W2**2*gm**8 + 2048*G*W2**2*gm**7 - 5376*G*W2**2*gm**6 + 4096*G*W2**2*gm**5 + 3328*G*W2**2*gm**4 - 6144*G*W2**2*gm**3 + 2304*G*W2**2*gm**2 - 192*G*W2*gm**8 + 1248*G*W2*gm**7 - 2368*G*W2*gm**6 + 352*G*W2*gm**5 + 2752*G*W2*gm**4 - 1888*G*W2*gm**3 - 192*G*W2*gm**2 + 288*G*W2*gm - 32*G*gm**8 + 220*G*gm**7 - 464*G*gm**6 + 172*G*gm**5 + 448*G*gm**4 - 428*G*gm**3 + 48*G*gm**2 + 36*G*gm - 32*W2*gm**8 + 256*W2*gm**7 - 672*W2*gm**6 + 512*W2*gm**5 + 416*W2*gm**4 - 768*W2*gm**3 + 288*W2*gm**2 - 4*gm**8 + 32*gm**7 - 84*gm**6 + 64*gm**5 + 52*gm**4 - 96*gm**3 + 36*gm**2)
    a3 = (8*G**10 + 56*G**9 + 272*G**8*W2 + 130*G**8 + 1552*G**7*W2 + 28*G**7 + 2560*G**6*W2**2 + 3504*G**6*W2 - 420*G**6 + 10752*G**5*W2**2 + 4176*G**5*W2 - 888*G**5 + 4096*G**4*W2**3 + 18944*G**4*W2**2 + 3072*G**4*W2 - 878*G**4 + 4096*G**3*W2**3 + 17920*G**3*W2**2 + 1632*G**3*W2 - 476*G**3 + 9216*G**2*W2**2 + 640*G**2*W2 - 136*G**2 + 2048*G*W2**2 + 128*G*W2 - 16*G) / (4*G**11 + 28*G**10 + 144*G**9*W2 + 61*G**9 + 920*G**8*W2 - 14*G**8 + 1792*G**7*W2**2 + 2760*G**7*W2 - 275*G**7 + 8448*G**6*W2**2 + 5680*G**6*W2 - 458*G**6 + 9216*G**5*W2**3 + 20416*G**5*W2**2 + 8928*G**5*W2 - 229*G**5 + 24064*G**4*W2**3 + 30464*G**4*W2**2 + 10200*G**4*W2 + 206*G**4 + 16384*G**3*W2**4 + 34304*G**3*W2**3 + 28480*G**3*W2**2 + 7848*G**3*W2 + 371*G**3 + 8192*G**2*W2**4 + 20480*G**2*W2**3 + 15872*G**2*W2**2 + 3808*G**2*W2 + 230*G**2 + 4096*G*W2**3 + 4608*G*W2**2 + 1056*G*W2 + 68*G + 512*W2**2 + 128*W2 + 8)
    a4 = (96*G**10*W2 + 12*G**10 + 896*G**9*W2 + 112*G**9 + 3072*G**8*W2**2 + 3840*G**8*W2 + 432*G**8 + 17408*G**7*W2**2 + 9280*G**7*W2 + 888*G**7 + 24576*G**6*W2**3 + 39936*G**6*W2**2 + 12960*G**6*W2 + 1044*G**6 + 40960*G**5*W2**3 + 40960*G**5*W2**2 + 10048*G**5*W2 + 696*G**5 + 15360*G**4*W2**2 + 3840*G**4*W2 + 240*G**4 - 131072*G**3*W2**4 - 32768*G**3*W2**3 + 512*G**3*W2 + 32*G**3) / (-24*G**12 - 188*G**11 - 480*G**10*W2 + 6*G**10*gm**2 - 558*G**10 - 2080*G**9*W2 + 53*G**9*gm**2 - 685*G**9 - 3072*G**8*W2**2 + 120*G**8*W2*gm**2 - 2392*G**8*W2 + 191*G**8*gm**2 + 25*G**8 - 3328*G**7*W2**2 + 640*G**7*W2*gm**2 + 1120*G**7*W2 + 349*G**7*gm**2 + 963*G**7 - 6144*G**6*W2**3 + 768*G**6*W2**2*gm**2 + 3840*G**6*W2**2 + 1208*G**6*W2*gm**2 + 3880*G**6*W2 + 295*G**6*gm**2 + 881*G**6 + 10240*G**5*W2**3 + 1600*G**5*W2**2*gm**2 + 5568*G**5*W2**2 + 768*G**5*W2*gm**2 + 1824*G**5*W2 - 33*G**5*gm**2 + 41*G**5 + 1536*G**4*W2**3*gm**2 - 3584*G**4*W2**3 + 448*G**4*W2**2*gm**2 - 960*G**4*W2**2 - 504*G**4*W2*gm**2 - 936*G**4*W2 - 327*G**4*gm**2 - 345*G**4 - 1024*G**3*W2**3*gm**2 - 1024*G**3*W2**3 - 1344*G**3*W2**2*gm**2 - 2496*G**3*W2**2 - 1152*G**3*W2*gm**2 - 992*G**3*W2 - 329*G**3*gm**2 - 155*G**3 - 512*G**2*W2**3*gm**2 + 512*G**2*W2**3 - 1216*G**2*W2**2*gm**2 + 192*G**2*W2**2 - 792*G**2*W2*gm**2 - 104*G**2*W2 - 161*G**2*gm**2 + 17*G**2 - 256*G*W2**2*gm**2 + 256*G*W2**2 - 256*G*W2*gm**2 + 128*G*W2 - 40*G*gm**2 + 24*G - 32*W2*gm**2 + 32*W2 - 4*gm**2 + 4)
    a5 = (1152*G**14*W2*gm - 4608*G**14*W2 - 72*G**14*gm + 72*G**14 + 9216*G**13*W2**2 + 9360*G**13*W2*gm - 35856*G**13*W2 - 558*G**13*gm + 558*G**13 + 105728*G**12*W2**2*gm - 409088*G**12*W2**2 + 18344*G**12*W2*gm - 90824*G**12*W2 - 1519*G**12*gm + 1519*G**12 + 901120*G**11*W2**3 + 797952*G**11*W2**2*gm - 3343616*G**11*W2**2 - 47064*G**11*W2*gm - 6152*G**11*W2 - 909*G**11*gm + 909*G**11 + 2285568*G**10*W2**3*gm - 8986624*G**10*W2**3 + 1897856*G**10*W2**2*gm - 9678720*G**10*W2**2 - 273040*G**10*W2*gm + 421200*G**10*W2 + 4184*G**10*gm - 4184*G**10 + 22806528*G**9*W2**4 + 15732736*G**9*W2**3*gm - 87019520*G**9*W2**3 - 209024*G**9*W2**2*gm - 10686080*G**9*W2**2 - 491168*G**9*W2*gm + 905440*G**9*W2 + 11208*G**9*gm - 11208*G**9 + 15532032*G**8*W2**4*gm + 4587520*G**8*W2**4 + 43128832*G**8*W2**3*gm - 282564608*G**8*W2**3 - 9762048*G**8*W2**2*gm + 5989376*G**8*W2**2 - 330168*G**8*W2*gm + 770584*G**8*W2 + 12425*G**8*gm - 12425*G**8 + 188743680*G**7*W2**5 + 89980928*G**7*W2**4*gm - 296812544*G**7*W2**4 + 63057920*G**7*W2**3*gm - 495251456*G**7*W2**3 - 22073344*G**7*W2**2*gm + 32464384*G**7*W2**2 + 186024*G**7*W2*gm + 3576*G**7*W2 + 6075*G**7*gm - 6075*G**7 + 20971520*G**6*W2**5*gm + 572522496*G**6*W2**5 + 206405632*G**6*W2**4*gm - 810450944*G**6*W2**4 + 54863872*G**6*W2**3*gm - 531679232*G**6*W2**3 - 25597824*G**6*W2**2*gm + 43476864*G**6*W2**2 + 540064*G**6*W2*gm - 588064*G**6*W2 - 650*G**6*gm + 650*G**6 + 268435456*G**5*W2**6 + 67108864*G**5*W2**5*gm + 868220928*G**5*W2**5 + 257163264*G**5*W2**4*gm - 992215040*G**5*W2**4 + 29675520*G**5*W2**3*gm - 361959424*G**5*W2**3 - 17696896*G**5*W2**2*gm + 31359360*G**5*W2**2 + 460992*G**5*W2*gm - 559168*G**5*W2 - 2520*G**5*gm + 2520*G**5 + 402653184*G**4*W2**6 + 50331648*G**4*W2**5*gm + 914358272*G**4*W2**5 + 189759488*G**4*W2**4*gm - 659521536*G**4*W2**4 + 9949184*G**4*W2**3*gm - 152907776*G**4*W2**3 - 7360512*G**4*W2**2*gm + 13155328*G**4*W2**2 + 204928*G**4*W2*gm - 253824*G**4*W2 - 1376*G**4*gm + 1376*G**4 + 134217728*G**3*W2**6 - 4194304*G**3*W2**5*gm + 572522496*G**3*W2**5 + 78315520*G**3*W2**4*gm - 233897984*G**3*W2**4 + 1941504*G**3*W2**3*gm - 36626432*G**3*W2**3 - 1705472*G**3*W2**2*gm + 3027456*G**3*W2**2 + 47744*G**3*W2*gm - 59008*G**3*W2 - 336*G**3*gm + 336*G**3 - 8388608*G**2*W2**5*gm + 142606336*G**2*W2**5 + 13762560*G**2*W2**4*gm - 34734080*G**2*W2**4 + 180224*G**2*W2**3*gm - 3817472*G**2*W2**3 - 169984*G**2*W2**2*gm + 296960*G**2*W2**2 + 4608*G**2*W2*gm - 5632*G**2*W2 - 32*G**2*gm + 32*G**2) / (4608*G**15*W2 - 72*G**15 + 36864*G**14*W2 - 576*G**14 + 468992*G**13*W2**2 + 91616*G**13*W2 - 1546*G**13 + 3642368*G**12*W2**2 - 32464*G**12*W2 - 382*G**12 + 13500416*G**11*W2**3 + 10643456*G**11*W2**2 - 590464*G**11*W2 + 6576*G**11 + 95797248*G**10*W2**3 + 11073792*G**10*W2**2 - 1105728*G**10*W2 + 14208*G**10 + 165281792*G**9*W2**4 + 316094464*G**9*W2**3 - 12716672*G**9*W2**2 - 423616*G**9*W2 + 8508*G**9 + 931201024*G**8*W2**4 + 679681024*G**8*W2**3 - 52497536*G**8*W2**2 + 1355040*G**8*W2 - 11004*G**8 + 952107008*G**7*W2**5 + 2601451520*G**7*W2**4 + 1097365504*G**7*W2**3 - 67305728*G**7*W2**2 + 2241664*G**7*W2 - 22936*G**7 + 3638558720*G**6*W2**5 + 4653350912*G**6*W2**4 + 1377075200*G**6*W2**3 - 37957120*G**6*W2**2 + 1127744*G**6*W2 - 13888*G**6 + 2449473536*G**5*W2**6 + 7138181120*G**5*W2**5 + 5722406912*G**5*W2**4 + 1311281152*G**5*W2**3 + 2640256*G**5*W2**2 - 551456*G**5*W2 + 2622*G**5 + 4982833152*G**4*W2**6 + 8314945536*G**4*W2**5 + 4885708800*G**4*W2**4 + 913081344*G**4*W2**3 + 18542976*G**4*W2**2 - 1130448*G**4*W2 + 9354*G**4 + 2147483648*G**3*W2**7 + 5301600256*G**3*W2**6 + 5948047360*G**3*W2**5 + 2826043392*G**3*W2**4 + 447168512*G**3*W2**3 + 12534272*G**3*W2**2 - 727808*G**3*W2 + 6432*G**3 + 1073741824*G**2*W2**7 + 2785017856*G**2*W2**6 + 2630090752*G**2*W2**5 + 1053458432*G**2*W2**4 + 145350656*G**2*W2**3 + 4072448*G**2*W2**2 - 247680*G**2*W2 + 2256*G**2 + 536870912*G*W2**6 + 654311424*G*W2**5 + 230817792*G*W2**4 + 27951104*G*W2**3 + 651264*G*W2**2 - 44544*G*W2 + 416*G + 67108864*W2**5 + 23068672*W2**4 + 2375680*W2**3 + 38912*W2**2 - 3328*W2 + 32)
    a6 = (-1152*G**14*W2*gm - 4608*G**14*W2 + 72*G**14*gm + 72*G**14 + 9216*G**13*W2**2 - 9360*G**13*W2*gm - 35856*G**13*W2 + 558*G**13*gm + 558*G**13 - 105728*G**12*W2**2*gm - 409088*G**12*W2**2 - 18344*G**12*W2*gm - 90824*G**12*W2 + 1519*G**12*gm + 1519*G**12 + 901120*G**11*W2**3 - 797952*G**11*W2**2*gm - 3343616*G**11*W2**2 + 47064*G**11*W2*gm - 6152*G**11*W2 + 909*G**11*gm + 909*G**11 - 2285568*G**10*W2**3*gm - 8986624*G**10*W2**3 - 1897856*G**10*W2**2*gm - 9678720*G**10*W2**2 + 273040*G**10*W2*gm + 421200*G**10*W2 - 4184*G**10*gm - 4184*G**10 + 22806528*G**9*W2**4 - 15732736*G**9*W2**3*gm - 87019520*G**9*W2**3 + 209024*G**9*W2**2*gm - 10686080*G**9*W2**2 + 491168*G**9*W2*gm + 905440*G**9*W2 - 11208*G**9*gm - 11208*G**9 - 15532032*G**8*W2**4*gm + 4587520*G**8*W2**4 - 43128832*G**8*W2**3*gm - 282564608*G**8*W2**3 + 9762048*G**8*W2**2*gm + 5989376*G**8*W2**2 + 330168*G**8*W2*gm + 770584*G**8*W2 - 12425*G**8*gm - 12425*G**8 + 188743680*G**7*W2**5 - 89980928*G**7*W2**4*gm - 296812544*G**7*W2**4 - 63057920*G**7*W2**3*gm - 495251456*G**7*W2**3 + 22073344*G**7*W2**2*gm + 32464384*G**7*W2**2 - 186024*G**7*W2*gm + 3576*G**7*W2 - 6075*G**7*gm - 6075*G**7 - 20971520*G**6*W2**5*gm + 572522496*G**6*W2**5 - 206405632*G**6*W2**4*gm - 810450944*G**6*W2**4 - 54863872*G**6*W2**3*gm - 531679232*G**6*W2**3 + 25597824*G**6*W2**2*gm + 43476864*G**6*W2**2 - 540064*G**6*W2*gm - 588064*G**6*W2 + 650*G**6*gm + 650*G**6 + 268435456*G**5*W2**6 - 67108864*G**5*W2**5*gm + 868220928*G**5*W2**5 - 257163264*G**5*W2**4*gm - 992215040*G**5*W2**4 - 29675520*G**5*W2**3*gm - 361959424*G**5*W2**3 + 17696896*G**5*W2**2*gm + 31359360*G**5*W2**2 - 460992*G**5*W2*gm - 559168*G**5*W2 + 2520*G**5*gm + 2520*G**5 + 402653184*G**4*W2**6 - 50331648*G**4*W2**5*gm + 914358272*G**4*W2**5 - 189759488*G**4*W2**4*gm - 659521536*G**4*W2**4 - 9949184*G**4*W2**3*gm - 152907776*G**4*W2**3 + 7360512*G**4*W2**2*gm + 13155328*G**4*W2**2 - 204928*G**4*W2*gm - 253824*G**4*W2 + 1376*G**4*gm + 1376*G**4 + 134217728*G**3*W2**6 + 4194304*G**3*W2**5*gm + 572522496*G**3*W2**5 - 78315520*G**3*W2**4*gm - 233897984*G**3*W2**4 - 1941504*G**3*W2**3*gm - 36626432*G**3*W2**3 + 1705472*G**3*W2**2*gm + 3027456*G**3*W2**2 - 47744*G**3*W2*gm - 59008*G**3*W2 + 336*G**3*gm + 336*G**3 + 8388608*G**2*W2**5*gm + 142606336*G**2*W2**5 - 13762560*G**2*W2**4*gm - 34734080*G**2*W2**4 - 180224*G**2*W2**3*gm - 3817472*G**2*W2**3 + 169984*G**2*W2**2*gm + 296960*G**2*W2**2 - 4608*G**2*W2*gm - 5632*G**2*W2 + 32*G**2*gm + 32*G**2) / (4608*G**15*W2 - 72*G**15 + 36864*G**14*W2 - 576*G**14 + 468992*G**13*W2**2 + 91616*G**13*W2 - 1546*G**13 + 3642368*G**12*W2**2 - 32464*G**12*W2 - 382*G**12 + 13500416*G**11*W2**3 + 10643456*G**11*W2**2 - 590464*G**11*W2 + 6576*G**11 + 95797248*G**10*W2**3 + 11073792*G**10*W2**2 - 1105728*G**10*W2 + 14208*G**10 + 165281792*G**9*W2**4 + 316094464*G**9*W2**3 - 12716672*G**9*W2**2 - 423616*G**9*W2 + 8508*G**9 + 931201024*G**8*W2**4 + 679681024*G**8*W2**3 - 52497536*G**8*W2**2 + 1355040*G**8*W2 - 11004*G**8 + 952107008*G**7*W2**5 + 2601451520*G**7*W2**4 + 1097365504*G**7*W2**3 - 67305728*G**7*W2**2 + 2241664*G**7*W2 - 22936*G**7 + 3638558720*G**6*W2**5 + 4653350912*G**6*W2**4 + 1377075200*G**6*W2**3 - 37957120*G**6*W2**2 + 1127744*G**6*W2 - 13888*G**6 + 2449473536*G**5*W2**6 + 7138181120*G**5*W2**5 + 5722406912*G**5*W2**4 + 1311281152*G**5*W2**3 + 2640256*G**5*W2**2 - 551456*G**5*W2 + 2622*G**5 + 4982833152*G**4*W2**6 + 8314945536*G**4*W2**5 + 4885708800*G**4*W2**4 + 913081344*G**4*W2**3 + 18542976*G**4*W2**2 - 1130448*G**4*W2 + 9354*G**4 + 2147483648*G**3*W2**7 + 5301600256*G**3*W2**6 + 5948047360*G**3*W2**5 + 2826043392*G**3*W2**4 + 447168512*G**3*W2**3 + 12534272*G**3*W2**2 - 727808*G**3*W2 + 6432*G**3 + 1073741824*G**2*W2**7 + 2785017856*G**2*W2**6 + 2630090752*G**2*W2**5 + 1053458432*G**2*W2**4 + 145350656*G**2*W2**3 + 4072448*G**2*W2**2 - 247680*G**2*W2 + 2256*G**2 + 536870912*G*W2**6 + 654311424*G*W2**5 + 230817792*G*W2**4 + 27951104*G*W2**3 + 651264*G*W2**2 - 44544*G*W2 + 416*G + 67108864*W2**5 + 23068672*W2**4 + 2375680*W2**3 + 38912*W2**2 - 3328*W2 + 32)
    a7 = (1728*G**15*W2 + 216*G**15 + 10080*G**14*W2 + 1260*G**14 + 54912*G**13*W2**2 + 21216*G**13*W2 + 1794*G**13 + 242368*G**12*W2**2 + 5728*G**12*W2 - 3071*G**12 + 548352*G**11*W2**3 + 333120*G**11*W2**2 - 61440*G**11*W2 - 11814*G**11 + 1961984*G**10*W2**3 - 62400*G**10*W2**2 - 126864*G**10*W2 - 11051*G**10 + 1916928*G**9*W2**4 + 2264064*G**9*W2**3 - 689664*G**9*W2**2 - 96864*G**9*W2 + 2622*G**9 + 5357568*G**8*W2**4 + 393216*G**8*W2**3 - 589248*G**8*W2**2 + 30080*G**8*W2 + 12427*G**8 + 1966080*G**7*W2**5 + 8257536*G**7*W2**4 + 714240*G**7*W2**3 + 713280*G**7*W2**2 + 163968*G**7*W2 + 8790*G**7 + 262144*G**6*W2**5 + 7012352*G**6*W2**4 + 4202496*G**6*W2**3 + 2047424*G**6*W2**2 + 214352*G**6*W2 + 1307*G**6 - 3145728*G**5*W2**5 + 688128*G**5*W2**4 + 5050368*G**5*W2**3 + 1993728*G**5*W2**2 + 161088*G**5*W2 - 1416*G**5 - 4194304*G**4*W2**6 - 4980736*G**4*W2**5 - 4046848*G**4*W2**4 + 2437120*G**4*W2**3 + 991488*G**4*W2**2 + 72192*G**4*W2 - 856*G**4 - 6291456*G**3*W2**6 - 5111808*G**3*W2**5 - 3293184*G**3*W2**4 + 417792*G**3*W2**3 + 248832*G**3*W2**2 + 17664*G**3*W2 - 192*G**3 - 2097152*G**2*W2**6 - 1572864*G**2*W2**5 - 753664*G**2*W2**4 + 24576*G**2*W2**2 + 1792*G**2*W2 - 16*G**2) / (216*G**17 + 1260*G**16 + 9024*G**15*W2 + 1362*G**15 + 48800*G**14*W2 - 5591*G**14 + 143232*G**13*W2**2 + 100032*G**13*W2 - 15186*G**13 + 620480*G**12*W2**2 + 86240*G**12*W2 - 3649*G**12 + 1112064*G**11*W2**3 + 1238656*G**11*W2**2 - 37216*G**11*W2 + 28044*G**11 + 3427328*G**10*W2**3 + 1394496*G**10*W2**2 - 222368*G**10*W2 + 31458*G**10 + 4448256*G**9*W2**4 + 5875712*G**9*W2**3 + 838016*G**9*W2**2 - 295072*G**9*W2 - 8268*G**9 + 8450048*G**8*W2**4 + 5812224*G**8*W2**3 + 102336*G**8*W2**2 - 102432*G**8*W2 - 34598*G**8 + 8650752*G**7*W2**5 + 11157504*G**7*W2**4 + 3145728*G**7*W2**3 - 285056*G**7*W2**2 + 186080*G**7*W2 - 16374*G**7 + 7208960*G**6*W2**5 + 5365760*G**6*W2**4 - 1057792*G**6*W2**3 - 574016*G**6*W2**2 + 254976*G**6*W2 + 8957*G**6 + 6291456*G**5*W2**6 + 3801088*G**5*W2**5 - 4710400*G**5*W2**4 - 5326848*G**5*W2**3 - 1043200*G**5*W2**2 + 101728*G**5*W2 + 11430*G**5 - 1048576*G**4*W2**6 - 5898240*G**4*W2**5 - 10588160*G**4*W2**4 - 6502400*G**4*W2**3 - 1214592*G**4*W2**2 - 37696*G**4*W2 + 3003*G**4 - 4194304*G**3*W2**6 - 9306112*G**3*W2**5 - 9158656*G**3*W2**4 - 4364288*G**3*W2**3 - 823040*G**3*W2**2 - 58688*G**3*W2 - 1032*G**3 - 1048576*G**2*W2**6 - 3932160*G**2*W2**5 - 4046848*G**2*W2**4 - 1720320*G**2*W2**3 - 322560*G**2*W2**2 - 27008*G**2*W2 - 824*G**2 - 524288*G*W2**5 - 851968*G*W2**4 - 368640*G*W2**3 - 68608*G*W2**2 - 5888*G*W2 - 192*G - 65536*W2**4 - 32768*W2**3 - 6144*W2**2 - 512*W2 - 16)
    return [
        (a1, (3 + gm) / 4),
        (a2, (3 - gm) / 4),
        (a3, G / 2),
        (a4, (G + 1) / 2),
        (a5, (2 * G + 3 + gm) / 4),
        (a6, (2 * G + 3 - gm) / 4),
        (a7, G),
    ]
