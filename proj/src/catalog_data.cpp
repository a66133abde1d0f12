#include "frobspec/catalog.hpp"

namespace frobspec {

namespace {

// Built-in corpus: the TSV below is the source of truth for scan runs
// without an explicit --catalog file.
const char kCatalogTsv[] = R"tsv(slice-c1	C(1)	1	section=slice24,family=C
slice-c2	C(2)	2	section=slice24,family=C
slice-c3	C(3)	3	section=slice24,family=C
slice-c4	C(4)	4	section=slice24,family=C
slice-c2c2	C(2) x C(2)	4	section=slice24,family=prod
slice-c5	C(5)	5	section=slice24,family=C
slice-s3	B(1)	6	section=slice24,family=B,m=1
slice-c6	C(6)	6	section=slice24,family=C
slice-c7	C(7)	7	section=slice24,family=C
slice-c8	C(8)	8	section=slice24,family=C
slice-c4c2	AB(2,3)	8	section=slice24,family=AB,q=2,m=3
slice-d8	D(3)	8	section=slice24,family=D,m=3
slice-q8	Q8	8	section=slice24,family=Q8
slice-c2cube	C(2) x C(2) x C(2)	8	section=slice24,family=prod
slice-c9	C(9)	9	section=slice24,family=C
slice-c3c3	C(3) x C(3)	9	section=slice24,family=prod
slice-d10	SDP(5,2,4)	10	section=slice24,family=SDP
slice-c10	C(10)	10	section=slice24,family=C
slice-c11	C(11)	11	section=slice24,family=C
slice-dic3	B(2)	12	section=slice24,family=B,m=2
slice-c12	C(12)	12	section=slice24,family=C
slice-a4	perm:4:(0 1 2)(1 2 3)	12	section=slice24,family=perm
slice-d12	SDP(6,2,5)	12	section=slice24,family=SDP
slice-c6c2	C(6) x C(2)	12	section=slice24,family=prod
slice-c13	C(13)	13	section=slice24,family=C
slice-d14	SDP(7,2,6)	14	section=slice24,family=SDP
slice-c14	C(14)	14	section=slice24,family=C
slice-c15	C(15)	15	section=slice24,family=C
slice-c16	C(16)	16	section=slice24,family=C
slice-c4c4	C(4) x C(4)	16	section=slice24,family=prod
slice-c2c2rc4	perm:8:(0 2 4 6)(1 3 5 7)(2 3)(6 7)	16	section=slice24,family=perm
slice-c4rc4	SDP(4,4,3)	16	section=slice24,family=SDP
slice-c8c2	AB(2,4)	16	section=slice24,family=AB,q=2,m=4
slice-mod16	M(2,4)	16	section=slice24,family=M,q=2,m=4
slice-d16	D(4)	16	section=slice24,family=D,m=4
slice-sd16	SD(4)	16	section=slice24,family=SD,m=4
slice-q16	Q(4)	16	section=slice24,family=Q,m=4
slice-c4c2c2	C(4) x C(2) x C(2)	16	section=slice24,family=prod
slice-d8c2	D(3) x C(2)	16	section=slice24,family=prod
slice-q8c2	Q8 x C(2)	16	section=slice24,family=prod
slice-pauli16	perm:8:(0 1 2 3)(4 5 6 7)(0 4)(1 5)(2 6)(3 7)(4 6)(5 7)	16	section=slice24,family=perm
slice-c2fourth	C(2) x C(2) x C(2) x C(2)	16	section=slice24,family=prod
slice-c17	C(17)	17	section=slice24,family=C
slice-d18	SDP(9,2,8)	18	section=slice24,family=SDP
slice-c18	C(18)	18	section=slice24,family=C
slice-c3s3	C(3) x B(1)	18	section=slice24,family=prod
slice-gdih9	perm:6:(0 1 2)(1 2)(4 5)(3 4 5)	18	section=slice24,family=perm
slice-c6c3	C(6) x C(3)	18	section=slice24,family=prod
slice-c19	C(19)	19	section=slice24,family=C
slice-dic5	SDP(5,4,4)	20	section=slice24,family=SDP
slice-c20	C(20)	20	section=slice24,family=C
slice-f20	SDP(5,4,2)	20	section=slice24,family=SDP
slice-d20	SDP(10,2,9)	20	section=slice24,family=SDP
slice-c10c2	C(10) x C(2)	20	section=slice24,family=prod
slice-c7rc3	SDP(7,3,2)	21	section=slice24,family=SDP
slice-c21	C(21)	21	section=slice24,family=C
slice-d22	SDP(11,2,10)	22	section=slice24,family=SDP
slice-c22	C(22)	22	section=slice24,family=C
slice-c23	C(23)	23	section=slice24,family=C
slice-c3rc8	B(3)	24	section=slice24,family=B,m=3
slice-c24	C(24)	24	section=slice24,family=C
slice-sl23	perm:8:(0 3 6)(1 7 4)(0 2 1 5)(3 4 7 6)	24	section=slice24,family=perm
slice-dic6	perm:11:(0 1 2 3)(4 5 6 7)(8 9 10)(0 4 2 6)(1 7 3 5)(9 10)	24	section=slice24,family=perm
slice-c4s3	C(4) x B(1)	24	section=slice24,family=prod
slice-d24	SDP(12,2,11)	24	section=slice24,family=SDP
slice-c2dic3	C(2) x B(2)	24	section=slice24,family=prod
slice-c3rd8	perm:7:(0 1 2)(1 2)(3 4 5 6)(4 6)	24	section=slice24,family=perm
slice-c12c2	C(12) x C(2)	24	section=slice24,family=prod
slice-c3d8	C(3) x D(3)	24	section=slice24,family=prod
slice-c3q8	C(3) x Q8	24	section=slice24,family=prod
slice-s4	perm:4:(0 1)(0 1 2 3)	24	section=slice24,family=perm
slice-c2a4	C(2) x perm:4:(0 1 2)(1 2 3)	24	section=slice24,family=prod
slice-c2c2s3	SDP(6,2,5) x C(2)	24	section=slice24,family=prod
slice-c2c2c2c3	C(2) x C(2) x C(2) x C(3)	24	section=slice24,family=prod
fam-ab-2-2	AB(2,2)	4	section=families,family=AB,q=2,m=2
fam-ab-2-3	AB(2,3)	8	section=families,family=AB,q=2,m=3
fam-ab-2-4	AB(2,4)	16	section=families,family=AB,q=2,m=4
fam-ab-2-5	AB(2,5)	32	section=families,family=AB,q=2,m=5
fam-ab-2-6	AB(2,6)	64	section=families,family=AB,q=2,m=6
fam-ab-2-7	AB(2,7)	128	section=families,family=AB,q=2,m=7
fam-ab-3-2	AB(3,2)	9	section=families,family=AB,q=3,m=2
fam-ab-3-3	AB(3,3)	27	section=families,family=AB,q=3,m=3
fam-ab-3-4	AB(3,4)	81	section=families,family=AB,q=3,m=4
fam-ab-3-5	AB(3,5)	243	section=families,family=AB,q=3,m=5
fam-ab-5-2	AB(5,2)	25	section=families,family=AB,q=5,m=2
fam-ab-5-3	AB(5,3)	125	section=families,family=AB,q=5,m=3
fam-ab-7-2	AB(7,2)	49	section=families,family=AB,q=7,m=2
fam-ab-7-3	AB(7,3)	343	section=families,family=AB,q=7,m=3
fam-d-3	D(3)	8	section=families,family=D,m=3
fam-q-3	Q(3)	8	section=families,family=Q,m=3
fam-d-4	D(4)	16	section=families,family=D,m=4
fam-q-4	Q(4)	16	section=families,family=Q,m=4
fam-d-5	D(5)	32	section=families,family=D,m=5
fam-q-5	Q(5)	32	section=families,family=Q,m=5
fam-d-6	D(6)	64	section=families,family=D,m=6
fam-q-6	Q(6)	64	section=families,family=Q,m=6
fam-d-7	D(7)	128	section=families,family=D,m=7
fam-q-7	Q(7)	128	section=families,family=Q,m=7
fam-sd-4	SD(4)	16	section=families,family=SD,m=4
fam-m2-4	M(2,4)	16	section=families,family=M,q=2,m=4
fam-sd-5	SD(5)	32	section=families,family=SD,m=5
fam-m2-5	M(2,5)	32	section=families,family=M,q=2,m=5
fam-sd-6	SD(6)	64	section=families,family=SD,m=6
fam-m2-6	M(2,6)	64	section=families,family=M,q=2,m=6
fam-sd-7	SD(7)	128	section=families,family=SD,m=7
fam-m2-7	M(2,7)	128	section=families,family=M,q=2,m=7
fam-modd-3-3	M(3,3)	27	section=families,family=Modd,q=3,m=3
fam-modd-3-4	M(3,4)	81	section=families,family=Modd,q=3,m=4
fam-modd-3-5	M(3,5)	243	section=families,family=Modd,q=3,m=5
fam-modd-5-3	M(5,3)	125	section=families,family=Modd,q=5,m=3
fam-modd-7-3	M(7,3)	343	section=families,family=Modd,q=7,m=3
thm-c2-r3	C(2) x C(3)	6	section=theorem,family=prod,q=2
thm-c2-r5	C(2) x C(5)	10	section=theorem,family=prod,q=2
thm-c2-r7	C(2) x C(7)	14	section=theorem,family=prod,q=2
thm-c2-r9	C(2) x C(9)	18	section=theorem,family=prod,q=2
thm-c2-r11	C(2) x C(11)	22	section=theorem,family=prod,q=2
thm-c2-r13	C(2) x C(13)	26	section=theorem,family=prod,q=2
thm-c2-r15	C(2) x C(15)	30	section=theorem,family=prod,q=2
thm-c2-r21	C(2) x C(21)	42	section=theorem,family=prod,q=2
thm-c2-r25	C(2) x C(25)	50	section=theorem,family=prod,q=2
thm-c2-r27	C(2) x C(27)	54	section=theorem,family=prod,q=2
thm-c2-r33	C(2) x C(33)	66	section=theorem,family=prod,q=2
thm-c2-r35	C(2) x C(35)	70	section=theorem,family=prod,q=2
thm-c2-r45	C(2) x C(45)	90	section=theorem,family=prod,q=2
thm-c2-r49	C(2) x C(49)	98	section=theorem,family=prod,q=2
thm-c2-r63	C(2) x C(63)	126	section=theorem,family=prod,q=2
thm-c2-r75	C(2) x C(75)	150	section=theorem,family=prod,q=2
thm-c2-r81	C(2) x C(81)	162	section=theorem,family=prod,q=2
thm-c2-r99	C(2) x C(99)	198	section=theorem,family=prod,q=2
thm-c2-r121	C(2) x C(121)	242	section=theorem,family=prod,q=2
thm-c2-r125	C(2) x C(125)	250	section=theorem,family=prod,q=2
thm-c4-r3	C(4) x C(3)	12	section=theorem,family=prod,q=2
thm-c4-r5	C(4) x C(5)	20	section=theorem,family=prod,q=2
thm-c4-r7	C(4) x C(7)	28	section=theorem,family=prod,q=2
thm-c4-r9	C(4) x C(9)	36	section=theorem,family=prod,q=2
thm-c4-r11	C(4) x C(11)	44	section=theorem,family=prod,q=2
thm-c4-r13	C(4) x C(13)	52	section=theorem,family=prod,q=2
thm-c4-r15	C(4) x C(15)	60	section=theorem,family=prod,q=2
thm-c4-r21	C(4) x C(21)	84	section=theorem,family=prod,q=2
thm-c4-r25	C(4) x C(25)	100	section=theorem,family=prod,q=2
thm-c4-r27	C(4) x C(27)	108	section=theorem,family=prod,q=2
thm-c4-r33	C(4) x C(33)	132	section=theorem,family=prod,q=2
thm-c4-r35	C(4) x C(35)	140	section=theorem,family=prod,q=2
thm-c4-r45	C(4) x C(45)	180	section=theorem,family=prod,q=2
thm-c4-r49	C(4) x C(49)	196	section=theorem,family=prod,q=2
thm-c4-r63	C(4) x C(63)	252	section=theorem,family=prod,q=2
thm-c4-r75	C(4) x C(75)	300	section=theorem,family=prod,q=2
thm-c4-r81	C(4) x C(81)	324	section=theorem,family=prod,q=2
thm-c4-r99	C(4) x C(99)	396	section=theorem,family=prod,q=2
thm-c4-r121	C(4) x C(121)	484	section=theorem,family=prod,q=2
thm-c4-r125	C(4) x C(125)	500	section=theorem,family=prod,q=2
thm-c8-r3	C(8) x C(3)	24	section=theorem,family=prod,q=2
thm-c8-r5	C(8) x C(5)	40	section=theorem,family=prod,q=2
thm-c8-r7	C(8) x C(7)	56	section=theorem,family=prod,q=2
thm-c8-r9	C(8) x C(9)	72	section=theorem,family=prod,q=2
thm-c8-r11	C(8) x C(11)	88	section=theorem,family=prod,q=2
thm-c8-r13	C(8) x C(13)	104	section=theorem,family=prod,q=2
thm-c8-r15	C(8) x C(15)	120	section=theorem,family=prod,q=2
thm-c8-r21	C(8) x C(21)	168	section=theorem,family=prod,q=2
thm-c8-r25	C(8) x C(25)	200	section=theorem,family=prod,q=2
thm-c8-r27	C(8) x C(27)	216	section=theorem,family=prod,q=2
thm-c8-r33	C(8) x C(33)	264	section=theorem,family=prod,q=2
thm-c8-r35	C(8) x C(35)	280	section=theorem,family=prod,q=2
thm-c8-r45	C(8) x C(45)	360	section=theorem,family=prod,q=2
thm-c8-r49	C(8) x C(49)	392	section=theorem,family=prod,q=2
thm-c16-r3	C(16) x C(3)	48	section=theorem,family=prod,q=2
thm-c16-r5	C(16) x C(5)	80	section=theorem,family=prod,q=2
thm-c16-r7	C(16) x C(7)	112	section=theorem,family=prod,q=2
thm-c16-r9	C(16) x C(9)	144	section=theorem,family=prod,q=2
thm-c16-r11	C(16) x C(11)	176	section=theorem,family=prod,q=2
thm-c16-r13	C(16) x C(13)	208	section=theorem,family=prod,q=2
thm-c16-r15	C(16) x C(15)	240	section=theorem,family=prod,q=2
thm-c16-r21	C(16) x C(21)	336	section=theorem,family=prod,q=2
thm-c16-r25	C(16) x C(25)	400	section=theorem,family=prod,q=2
thm-c16-r27	C(16) x C(27)	432	section=theorem,family=prod,q=2
thm-c32-r3	C(32) x C(3)	96	section=theorem,family=prod,q=2
thm-c32-r5	C(32) x C(5)	160	section=theorem,family=prod,q=2
thm-c32-r7	C(32) x C(7)	224	section=theorem,family=prod,q=2
thm-c32-r9	C(32) x C(9)	288	section=theorem,family=prod,q=2
thm-c32-r11	C(32) x C(11)	352	section=theorem,family=prod,q=2
thm-c32-r13	C(32) x C(13)	416	section=theorem,family=prod,q=2
thm-c32-r15	C(32) x C(15)	480	section=theorem,family=prod,q=2
thm-c64-r3	C(64) x C(3)	192	section=theorem,family=prod,q=2
thm-c64-r5	C(64) x C(5)	320	section=theorem,family=prod,q=2
thm-c64-r7	C(64) x C(7)	448	section=theorem,family=prod,q=2
thm-c128-r3	C(128) x C(3)	384	section=theorem,family=prod,q=2
thm-ab2-2-r3	AB(2,2) x C(3)	12	section=theorem,family=prod,q=2
thm-ab2-2-r5	AB(2,2) x C(5)	20	section=theorem,family=prod,q=2
thm-ab2-2-r7	AB(2,2) x C(7)	28	section=theorem,family=prod,q=2
thm-ab2-2-r9	AB(2,2) x C(9)	36	section=theorem,family=prod,q=2
thm-ab2-2-r11	AB(2,2) x C(11)	44	section=theorem,family=prod,q=2
thm-ab2-2-r13	AB(2,2) x C(13)	52	section=theorem,family=prod,q=2
thm-ab2-2-r15	AB(2,2) x C(15)	60	section=theorem,family=prod,q=2
thm-ab2-2-r21	AB(2,2) x C(21)	84	section=theorem,family=prod,q=2
thm-ab2-2-r25	AB(2,2) x C(25)	100	section=theorem,family=prod,q=2
thm-ab2-2-r27	AB(2,2) x C(27)	108	section=theorem,family=prod,q=2
thm-ab2-2-r33	AB(2,2) x C(33)	132	section=theorem,family=prod,q=2
thm-ab2-2-r35	AB(2,2) x C(35)	140	section=theorem,family=prod,q=2
thm-ab2-2-r45	AB(2,2) x C(45)	180	section=theorem,family=prod,q=2
thm-ab2-2-r49	AB(2,2) x C(49)	196	section=theorem,family=prod,q=2
thm-ab2-2-r63	AB(2,2) x C(63)	252	section=theorem,family=prod,q=2
thm-ab2-2-r75	AB(2,2) x C(75)	300	section=theorem,family=prod,q=2
thm-ab2-2-r81	AB(2,2) x C(81)	324	section=theorem,family=prod,q=2
thm-ab2-2-r99	AB(2,2) x C(99)	396	section=theorem,family=prod,q=2
thm-ab2-2-r121	AB(2,2) x C(121)	484	section=theorem,family=prod,q=2
thm-ab2-2-r125	AB(2,2) x C(125)	500	section=theorem,family=prod,q=2
thm-ab2-3-r3	AB(2,3) x C(3)	24	section=theorem,family=prod,q=2
thm-ab2-3-r5	AB(2,3) x C(5)	40	section=theorem,family=prod,q=2
thm-ab2-3-r7	AB(2,3) x C(7)	56	section=theorem,family=prod,q=2
thm-ab2-3-r9	AB(2,3) x C(9)	72	section=theorem,family=prod,q=2
thm-ab2-3-r11	AB(2,3) x C(11)	88	section=theorem,family=prod,q=2
thm-ab2-3-r13	AB(2,3) x C(13)	104	section=theorem,family=prod,q=2
thm-ab2-3-r15	AB(2,3) x C(15)	120	section=theorem,family=prod,q=2
thm-ab2-3-r21	AB(2,3) x C(21)	168	section=theorem,family=prod,q=2
thm-ab2-3-r25	AB(2,3) x C(25)	200	section=theorem,family=prod,q=2
thm-ab2-3-r27	AB(2,3) x C(27)	216	section=theorem,family=prod,q=2
thm-ab2-3-r33	AB(2,3) x C(33)	264	section=theorem,family=prod,q=2
thm-ab2-3-r35	AB(2,3) x C(35)	280	section=theorem,family=prod,q=2
thm-ab2-3-r45	AB(2,3) x C(45)	360	section=theorem,family=prod,q=2
thm-ab2-3-r49	AB(2,3) x C(49)	392	section=theorem,family=prod,q=2
thm-ab2-4-r3	AB(2,4) x C(3)	48	section=theorem,family=prod,q=2
thm-ab2-4-r5	AB(2,4) x C(5)	80	section=theorem,family=prod,q=2
thm-ab2-4-r7	AB(2,4) x C(7)	112	section=theorem,family=prod,q=2
thm-ab2-4-r9	AB(2,4) x C(9)	144	section=theorem,family=prod,q=2
thm-ab2-4-r11	AB(2,4) x C(11)	176	section=theorem,family=prod,q=2
thm-ab2-4-r13	AB(2,4) x C(13)	208	section=theorem,family=prod,q=2
thm-ab2-4-r15	AB(2,4) x C(15)	240	section=theorem,family=prod,q=2
thm-ab2-4-r21	AB(2,4) x C(21)	336	section=theorem,family=prod,q=2
thm-ab2-4-r25	AB(2,4) x C(25)	400	section=theorem,family=prod,q=2
thm-ab2-4-r27	AB(2,4) x C(27)	432	section=theorem,family=prod,q=2
thm-ab2-5-r3	AB(2,5) x C(3)	96	section=theorem,family=prod,q=2
thm-ab2-5-r5	AB(2,5) x C(5)	160	section=theorem,family=prod,q=2
thm-ab2-5-r7	AB(2,5) x C(7)	224	section=theorem,family=prod,q=2
thm-ab2-5-r9	AB(2,5) x C(9)	288	section=theorem,family=prod,q=2
thm-ab2-5-r11	AB(2,5) x C(11)	352	section=theorem,family=prod,q=2
thm-ab2-5-r13	AB(2,5) x C(13)	416	section=theorem,family=prod,q=2
thm-ab2-5-r15	AB(2,5) x C(15)	480	section=theorem,family=prod,q=2
thm-ab2-6-r3	AB(2,6) x C(3)	192	section=theorem,family=prod,q=2
thm-ab2-6-r5	AB(2,6) x C(5)	320	section=theorem,family=prod,q=2
thm-ab2-6-r7	AB(2,6) x C(7)	448	section=theorem,family=prod,q=2
thm-ab2-7-r3	AB(2,7) x C(3)	384	section=theorem,family=prod,q=2
thm-q8-r3	Q8 x C(3)	24	section=theorem,family=prod,q=2
thm-q8-r5	Q8 x C(5)	40	section=theorem,family=prod,q=2
thm-q8-r7	Q8 x C(7)	56	section=theorem,family=prod,q=2
thm-q8-r9	Q8 x C(9)	72	section=theorem,family=prod,q=2
thm-q8-r11	Q8 x C(11)	88	section=theorem,family=prod,q=2
thm-q8-r13	Q8 x C(13)	104	section=theorem,family=prod,q=2
thm-q8-r15	Q8 x C(15)	120	section=theorem,family=prod,q=2
thm-q8-r21	Q8 x C(21)	168	section=theorem,family=prod,q=2
thm-q8-r25	Q8 x C(25)	200	section=theorem,family=prod,q=2
thm-q8-r27	Q8 x C(27)	216	section=theorem,family=prod,q=2
thm-q8-r33	Q8 x C(33)	264	section=theorem,family=prod,q=2
thm-q8-r35	Q8 x C(35)	280	section=theorem,family=prod,q=2
thm-q8-r45	Q8 x C(45)	360	section=theorem,family=prod,q=2
thm-q8-r49	Q8 x C(49)	392	section=theorem,family=prod,q=2
thm-m2-4-r3	M(2,4) x C(3)	48	section=theorem,family=prod,q=2
thm-m2-4-r5	M(2,4) x C(5)	80	section=theorem,family=prod,q=2
thm-m2-4-r7	M(2,4) x C(7)	112	section=theorem,family=prod,q=2
thm-m2-4-r9	M(2,4) x C(9)	144	section=theorem,family=prod,q=2
thm-m2-4-r11	M(2,4) x C(11)	176	section=theorem,family=prod,q=2
thm-m2-4-r13	M(2,4) x C(13)	208	section=theorem,family=prod,q=2
thm-m2-4-r15	M(2,4) x C(15)	240	section=theorem,family=prod,q=2
thm-m2-4-r21	M(2,4) x C(21)	336	section=theorem,family=prod,q=2
thm-m2-4-r25	M(2,4) x C(25)	400	section=theorem,family=prod,q=2
thm-m2-4-r27	M(2,4) x C(27)	432	section=theorem,family=prod,q=2
thm-m2-5-r3	M(2,5) x C(3)	96	section=theorem,family=prod,q=2
thm-m2-5-r5	M(2,5) x C(5)	160	section=theorem,family=prod,q=2
thm-m2-5-r7	M(2,5) x C(7)	224	section=theorem,family=prod,q=2
thm-m2-5-r9	M(2,5) x C(9)	288	section=theorem,family=prod,q=2
thm-m2-5-r11	M(2,5) x C(11)	352	section=theorem,family=prod,q=2
thm-m2-5-r13	M(2,5) x C(13)	416	section=theorem,family=prod,q=2
thm-m2-5-r15	M(2,5) x C(15)	480	section=theorem,family=prod,q=2
thm-m2-6-r3	M(2,6) x C(3)	192	section=theorem,family=prod,q=2
thm-m2-6-r5	M(2,6) x C(5)	320	section=theorem,family=prod,q=2
thm-m2-6-r7	M(2,6) x C(7)	448	section=theorem,family=prod,q=2
thm-m2-7-r3	M(2,7) x C(3)	384	section=theorem,family=prod,q=2
thm-c3-r5	C(3) x C(5)	15	section=theorem,family=prod,q=3
thm-c3-r7	C(3) x C(7)	21	section=theorem,family=prod,q=3
thm-c3-r11	C(3) x C(11)	33	section=theorem,family=prod,q=3
thm-c3-r13	C(3) x C(13)	39	section=theorem,family=prod,q=3
thm-c3-r25	C(3) x C(25)	75	section=theorem,family=prod,q=3
thm-c3-r35	C(3) x C(35)	105	section=theorem,family=prod,q=3
thm-c3-r49	C(3) x C(49)	147	section=theorem,family=prod,q=3
thm-c3-r121	C(3) x C(121)	363	section=theorem,family=prod,q=3
thm-c3-r125	C(3) x C(125)	375	section=theorem,family=prod,q=3
thm-c9-r5	C(9) x C(5)	45	section=theorem,family=prod,q=3
thm-c9-r7	C(9) x C(7)	63	section=theorem,family=prod,q=3
thm-c9-r11	C(9) x C(11)	99	section=theorem,family=prod,q=3
thm-c9-r13	C(9) x C(13)	117	section=theorem,family=prod,q=3
thm-c9-r25	C(9) x C(25)	225	section=theorem,family=prod,q=3
thm-c9-r35	C(9) x C(35)	315	section=theorem,family=prod,q=3
thm-c9-r49	C(9) x C(49)	441	section=theorem,family=prod,q=3
thm-c27-r5	C(27) x C(5)	135	section=theorem,family=prod,q=3
thm-c27-r7	C(27) x C(7)	189	section=theorem,family=prod,q=3
thm-c27-r11	C(27) x C(11)	297	section=theorem,family=prod,q=3
thm-c27-r13	C(27) x C(13)	351	section=theorem,family=prod,q=3
thm-c81-r5	C(81) x C(5)	405	section=theorem,family=prod,q=3
thm-ab3-2-r5	AB(3,2) x C(5)	45	section=theorem,family=prod,q=3
thm-ab3-2-r7	AB(3,2) x C(7)	63	section=theorem,family=prod,q=3
thm-ab3-2-r11	AB(3,2) x C(11)	99	section=theorem,family=prod,q=3
thm-ab3-2-r13	AB(3,2) x C(13)	117	section=theorem,family=prod,q=3
thm-ab3-2-r25	AB(3,2) x C(25)	225	section=theorem,family=prod,q=3
thm-ab3-2-r35	AB(3,2) x C(35)	315	section=theorem,family=prod,q=3
thm-ab3-2-r49	AB(3,2) x C(49)	441	section=theorem,family=prod,q=3
thm-ab3-3-r5	AB(3,3) x C(5)	135	section=theorem,family=prod,q=3
thm-ab3-3-r7	AB(3,3) x C(7)	189	section=theorem,family=prod,q=3
thm-ab3-3-r11	AB(3,3) x C(11)	297	section=theorem,family=prod,q=3
thm-ab3-3-r13	AB(3,3) x C(13)	351	section=theorem,family=prod,q=3
thm-ab3-4-r5	AB(3,4) x C(5)	405	section=theorem,family=prod,q=3
thm-m3-3-r5	M(3,3) x C(5)	135	section=theorem,family=prod,q=3
thm-m3-3-r7	M(3,3) x C(7)	189	section=theorem,family=prod,q=3
thm-m3-3-r11	M(3,3) x C(11)	297	section=theorem,family=prod,q=3
thm-m3-3-r13	M(3,3) x C(13)	351	section=theorem,family=prod,q=3
thm-m3-4-r5	M(3,4) x C(5)	405	section=theorem,family=prod,q=3
thm-c5-r3	C(5) x C(3)	15	section=theorem,family=prod,q=5
thm-c5-r7	C(5) x C(7)	35	section=theorem,family=prod,q=5
thm-c5-r9	C(5) x C(9)	45	section=theorem,family=prod,q=5
thm-c5-r11	C(5) x C(11)	55	section=theorem,family=prod,q=5
thm-c5-r13	C(5) x C(13)	65	section=theorem,family=prod,q=5
thm-c5-r21	C(5) x C(21)	105	section=theorem,family=prod,q=5
thm-c5-r27	C(5) x C(27)	135	section=theorem,family=prod,q=5
thm-c5-r33	C(5) x C(33)	165	section=theorem,family=prod,q=5
thm-c5-r49	C(5) x C(49)	245	section=theorem,family=prod,q=5
thm-c5-r63	C(5) x C(63)	315	section=theorem,family=prod,q=5
thm-c5-r81	C(5) x C(81)	405	section=theorem,family=prod,q=5
thm-c5-r99	C(5) x C(99)	495	section=theorem,family=prod,q=5
thm-c25-r3	C(25) x C(3)	75	section=theorem,family=prod,q=5
thm-c25-r7	C(25) x C(7)	175	section=theorem,family=prod,q=5
thm-c25-r9	C(25) x C(9)	225	section=theorem,family=prod,q=5
thm-c25-r11	C(25) x C(11)	275	section=theorem,family=prod,q=5
thm-c25-r13	C(25) x C(13)	325	section=theorem,family=prod,q=5
thm-c125-r3	C(125) x C(3)	375	section=theorem,family=prod,q=5
thm-ab5-2-r3	AB(5,2) x C(3)	75	section=theorem,family=prod,q=5
thm-ab5-2-r7	AB(5,2) x C(7)	175	section=theorem,family=prod,q=5
thm-ab5-2-r9	AB(5,2) x C(9)	225	section=theorem,family=prod,q=5
thm-ab5-2-r11	AB(5,2) x C(11)	275	section=theorem,family=prod,q=5
thm-ab5-2-r13	AB(5,2) x C(13)	325	section=theorem,family=prod,q=5
thm-ab5-3-r3	AB(5,3) x C(3)	375	section=theorem,family=prod,q=5
thm-m5-3-r3	M(5,3) x C(3)	375	section=theorem,family=prod,q=5
case2-b1	B(1)	6	section=case2,family=B,m=1
case2-b1-t5	B(1) x C(5)	30	section=case2,family=prod,m=1
case2-b1-t7	B(1) x C(7)	42	section=case2,family=prod,m=1
case2-b1-t11	B(1) x C(11)	66	section=case2,family=prod,m=1
case2-b1-t13	B(1) x C(13)	78	section=case2,family=prod,m=1
case2-b1-t17	B(1) x C(17)	102	section=case2,family=prod,m=1
case2-b1-t19	B(1) x C(19)	114	section=case2,family=prod,m=1
case2-b1-t23	B(1) x C(23)	138	section=case2,family=prod,m=1
case2-b1-t25	B(1) x C(25)	150	section=case2,family=prod,m=1
case2-b1-t35	B(1) x C(35)	210	section=case2,family=prod,m=1
case2-b1-t49	B(1) x C(49)	294	section=case2,family=prod,m=1
case2-b1-bad2	B(1) x C(2)	12	section=case2,family=prod,m=1
case2-b1-bad3	B(1) x C(3)	18	section=case2,family=prod,m=1
case2-b1-bad9	B(1) x C(9)	54	section=case2,family=prod,m=1
case2-b2	B(2)	12	section=case2,family=B,m=2
case2-b2-t5	B(2) x C(5)	60	section=case2,family=prod,m=2
case2-b2-t7	B(2) x C(7)	84	section=case2,family=prod,m=2
case2-b2-t11	B(2) x C(11)	132	section=case2,family=prod,m=2
case2-b2-t13	B(2) x C(13)	156	section=case2,family=prod,m=2
case2-b2-t17	B(2) x C(17)	204	section=case2,family=prod,m=2
case2-b2-t19	B(2) x C(19)	228	section=case2,family=prod,m=2
case2-b2-t23	B(2) x C(23)	276	section=case2,family=prod,m=2
case2-b2-t25	B(2) x C(25)	300	section=case2,family=prod,m=2
case2-b2-t35	B(2) x C(35)	420	section=case2,family=prod,m=2
case2-b2-bad2	B(2) x C(2)	24	section=case2,family=prod,m=2
case2-b2-bad3	B(2) x C(3)	36	section=case2,family=prod,m=2
case2-b2-bad9	B(2) x C(9)	108	section=case2,family=prod,m=2
case2-b3	B(3)	24	section=case2,family=B,m=3
case2-b3-t5	B(3) x C(5)	120	section=case2,family=prod,m=3
case2-b3-t7	B(3) x C(7)	168	section=case2,family=prod,m=3
case2-b3-t11	B(3) x C(11)	264	section=case2,family=prod,m=3
case2-b3-t13	B(3) x C(13)	312	section=case2,family=prod,m=3
case2-b3-t17	B(3) x C(17)	408	section=case2,family=prod,m=3
case2-b3-t19	B(3) x C(19)	456	section=case2,family=prod,m=3
case2-b3-bad2	B(3) x C(2)	48	section=case2,family=prod,m=3
case2-b3-bad3	B(3) x C(3)	72	section=case2,family=prod,m=3
case2-b3-bad9	B(3) x C(9)	216	section=case2,family=prod,m=3
case2-b4	B(4)	48	section=case2,family=B,m=4
case2-b4-t5	B(4) x C(5)	240	section=case2,family=prod,m=4
case2-b4-t7	B(4) x C(7)	336	section=case2,family=prod,m=4
case2-b4-bad2	B(4) x C(2)	96	section=case2,family=prod,m=4
case2-b4-bad3	B(4) x C(3)	144	section=case2,family=prod,m=4
case2-b4-bad9	B(4) x C(9)	432	section=case2,family=prod,m=4
case2-b5	B(5)	96	section=case2,family=B,m=5
case2-b5-t5	B(5) x C(5)	480	section=case2,family=prod,m=5
case2-b5-bad2	B(5) x C(2)	192	section=case2,family=prod,m=5
case2-b5-bad3	B(5) x C(3)	288	section=case2,family=prod,m=5
case2-b6	B(6)	192	section=case2,family=B,m=6
case2-b6-bad2	B(6) x C(2)	384	section=case2,family=prod,m=6
case2-b7	B(7)	384	section=case2,family=B,m=7
extra-s3	perm:3:(0 1)(0 1 2)	6	section=extra,family=perm
extra-s4	perm:4:(0 1)(0 1 2 3)	24	section=extra,family=perm
extra-s5	perm:5:(0 1)(0 1 2 3 4)	120	section=extra,family=perm
extra-a4	perm:4:(0 1 2)(1 2 3)	12	section=extra,family=perm
extra-a5	perm:5:(0 1 2)(0 1 2 3 4)	60	section=extra,family=perm
extra-dih3	SDP(3,2,2)	6	section=extra,family=SDP
extra-dih4	SDP(4,2,3)	8	section=extra,family=SDP
extra-dih5	SDP(5,2,4)	10	section=extra,family=SDP
extra-dih6	SDP(6,2,5)	12	section=extra,family=SDP
extra-dih7	SDP(7,2,6)	14	section=extra,family=SDP
extra-dih8	SDP(8,2,7)	16	section=extra,family=SDP
extra-dih9	SDP(9,2,8)	18	section=extra,family=SDP
extra-dih10	SDP(10,2,9)	20	section=extra,family=SDP
extra-dih11	SDP(11,2,10)	22	section=extra,family=SDP
extra-dih12	SDP(12,2,11)	24	section=extra,family=SDP
extra-dih13	SDP(13,2,12)	26	section=extra,family=SDP
extra-dih14	SDP(14,2,13)	28	section=extra,family=SDP
extra-dih15	SDP(15,2,14)	30	section=extra,family=SDP
extra-dih16	SDP(16,2,15)	32	section=extra,family=SDP
extra-dih17	SDP(17,2,16)	34	section=extra,family=SDP
extra-dih18	SDP(18,2,17)	36	section=extra,family=SDP
extra-dih19	SDP(19,2,18)	38	section=extra,family=SDP
extra-dih20	SDP(20,2,19)	40	section=extra,family=SDP
extra-dih21	SDP(21,2,20)	42	section=extra,family=SDP
extra-dih22	SDP(22,2,21)	44	section=extra,family=SDP
extra-dih23	SDP(23,2,22)	46	section=extra,family=SDP
extra-dih24	SDP(24,2,23)	48	section=extra,family=SDP
extra-sdp-3-2-2	SDP(3,2,2)	6	section=extra,family=SDP
extra-sdp-4-2-3	SDP(4,2,3)	8	section=extra,family=SDP
extra-sdp-5-2-4	SDP(5,2,4)	10	section=extra,family=SDP
extra-sdp-5-4-2	SDP(5,4,2)	20	section=extra,family=SDP
extra-sdp-5-4-3	SDP(5,4,3)	20	section=extra,family=SDP
extra-sdp-6-2-5	SDP(6,2,5)	12	section=extra,family=SDP
extra-sdp-7-2-6	SDP(7,2,6)	14	section=extra,family=SDP
extra-sdp-7-3-2	SDP(7,3,2)	21	section=extra,family=SDP
extra-sdp-7-3-4	SDP(7,3,4)	21	section=extra,family=SDP
extra-sdp-7-6-3	SDP(7,6,3)	42	section=extra,family=SDP
extra-sdp-7-6-5	SDP(7,6,5)	42	section=extra,family=SDP
extra-sdp-8-2-3	SDP(8,2,3)	16	section=extra,family=SDP
extra-sdp-8-2-5	SDP(8,2,5)	16	section=extra,family=SDP
extra-sdp-8-2-7	SDP(8,2,7)	16	section=extra,family=SDP
extra-sdp-9-2-8	SDP(9,2,8)	18	section=extra,family=SDP
extra-sdp-9-3-4	SDP(9,3,4)	27	section=extra,family=SDP
extra-sdp-9-3-7	SDP(9,3,7)	27	section=extra,family=SDP
extra-sdp-9-6-2	SDP(9,6,2)	54	section=extra,family=SDP
extra-sdp-9-6-5	SDP(9,6,5)	54	section=extra,family=SDP
extra-sdp-10-2-9	SDP(10,2,9)	20	section=extra,family=SDP
extra-sdp-10-4-3	SDP(10,4,3)	40	section=extra,family=SDP
extra-sdp-10-4-7	SDP(10,4,7)	40	section=extra,family=SDP
extra-sdp-11-2-10	SDP(11,2,10)	22	section=extra,family=SDP
extra-sdp-11-5-3	SDP(11,5,3)	55	section=extra,family=SDP
extra-sdp-11-5-4	SDP(11,5,4)	55	section=extra,family=SDP
extra-sdp-11-5-5	SDP(11,5,5)	55	section=extra,family=SDP
extra-sdp-11-5-9	SDP(11,5,9)	55	section=extra,family=SDP
extra-sdp-12-2-5	SDP(12,2,5)	24	section=extra,family=SDP
extra-sdp-12-2-7	SDP(12,2,7)	24	section=extra,family=SDP
extra-sdp-12-2-11	SDP(12,2,11)	24	section=extra,family=SDP
extra-sdp-13-2-12	SDP(13,2,12)	26	section=extra,family=SDP
extra-sdp-13-3-3	SDP(13,3,3)	39	section=extra,family=SDP
extra-sdp-13-3-9	SDP(13,3,9)	39	section=extra,family=SDP
extra-sdp-13-4-5	SDP(13,4,5)	52	section=extra,family=SDP
extra-sdp-13-4-8	SDP(13,4,8)	52	section=extra,family=SDP
extra-sdp-13-6-4	SDP(13,6,4)	78	section=extra,family=SDP
extra-sdp-13-6-10	SDP(13,6,10)	78	section=extra,family=SDP
extra-sdp-14-2-13	SDP(14,2,13)	28	section=extra,family=SDP
extra-sdp-14-3-9	SDP(14,3,9)	42	section=extra,family=SDP
extra-sdp-14-3-11	SDP(14,3,11)	42	section=extra,family=SDP
extra-sdp-14-6-3	SDP(14,6,3)	84	section=extra,family=SDP
extra-sdp-14-6-5	SDP(14,6,5)	84	section=extra,family=SDP
extra-sdp-15-2-4	SDP(15,2,4)	30	section=extra,family=SDP
extra-sdp-15-2-11	SDP(15,2,11)	30	section=extra,family=SDP
extra-sdp-15-2-14	SDP(15,2,14)	30	section=extra,family=SDP
extra-sdp-15-4-2	SDP(15,4,2)	60	section=extra,family=SDP
extra-sdp-15-4-7	SDP(15,4,7)	60	section=extra,family=SDP
extra-sdp-15-4-8	SDP(15,4,8)	60	section=extra,family=SDP
extra-sdp-15-4-13	SDP(15,4,13)	60	section=extra,family=SDP
)tsv";

} // namespace

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> entries = parse_catalog(kCatalogTsv);
    return entries;
}

} // namespace frobspec
