// Generated by tools/gen_oracles.py; do not edit.
#![allow(dead_code)]

pub const SVT_Y: [f64; 20] = [-1.4853709319292387, -1.0936310396473372, -0.544956398412692, -0.46369455158223316, -0.6818992769382881, 0.1618375480009607, -1.1604330274381545, 1.9097591702503487, 0.7217618218316503, 1.3943334892010104, -0.7739963358965412, 0.002692199880558171, 1.597290094884282, 1.7640954875023525, 0.8498345469580562, 0.7329920868167646, 0.5875967019300486, 0.1797562543972933, 0.8843928490616334, -0.01624787203669665];
pub const SVT_DELTA: f64 = 0.7;
pub const SVT_OUT: [f64; 20] = [-1.051278199298384, -0.688193777015384, -0.41064894440457156, -0.4750183410863435, -0.4279814271897238, -0.004235718392343042, -0.7235080557061337, 1.5123269664961496, 0.7171145779704993, 1.0796918997854381, -0.40326793985496556, -0.16237920978528247, 1.3137274229150995, 1.3027531060927704, 0.7367152906437234, 0.435407507554744, 0.5164733784993036, 0.21971019507163625, 0.4703660005640787, 0.16499965585278903];
pub const SVT_NUCLEAR_OF_Y: f64 = 7.781292404687406;
pub const SOFT_Y: [f64; 12] = [-0.9889414917773712, -2.3289558559907664, 1.9926998690569737, -0.6475782799623588, -0.5873133498505821, -0.3082867512368368, -0.5543160847731813, 0.7582647563668803, -0.12038744224926921, 2.0038628374323144, 0.3118982428519149, 0.8766503987921992];
pub const SOFT_OUT: [f64; 12] = [-0.5889414917773712, -1.9289558559907665, 1.5926998690569736, -0.24757827996235882, -0.18731334985058212, -0.0, -0.15431608477318126, 0.35826475636688027, -0.0, 1.6038628374323145, 0.0, 0.47665039879219917];
pub const TV_VOLUME: [f64; 8] = [0.1830876360379482, 0.5748320755174111, 0.06179504342731379, 0.4305620208139993, 0.7199741263562545, 0.655134509345734, 0.2764516028327426, 0.6467974520071216];
pub const TV_VALUE: f64 = 3.843763884454664;
pub const TV_SHRINK_H: [f64; 8] = [-0.06743190235432285, -0.042460839340136024, 0.03926370830480882, 0.048340928242200154, -0.25327898781472086, -0.0, 0.2276605423591495, 0.0025060334342480724];
pub const TV_SHRINK_V: [f64; 8] = [0.21778801344965262, -0.11529625979088054, 0.11937381105404272, -0.12356367389331305, -0.03702746015298632, 0.0, 0.19009888429945615, -0.11132214192261418];
pub const TV_SHRINK_D: [f64; 8] = [0.2984788816141192, 0.023634209804771694, 0.06948662200060579, 0.07245454702444729, -0.30659562846758087, -0.0, -0.11018342055541246, -0.06499814001869404];
pub const POISSON_RHS: [f64; 12] = [1.3840372496996602, -0.19835072981046778, -0.8249553465777625, -2.268749593924337, 0.7502166236112786, -1.4460474549950035, -0.7252783531746756, 0.4192990351713026, 1.2877990487224835, 0.8047875183284264, 0.36948715405752075, -0.7639168882819066];
pub const POISSON_ALPHA: f64 = 1.3;
pub const POISSON_RHO: f64 = 0.8;
pub const POISSON_OUT: [f64; 12] = [0.07191879400136808, -0.019214067379029174, -0.20182188711131283, -0.40284248640214954, 0.030973802320793848, -0.38904472074132723, -0.07747241528475128, 0.08469331848317217, 0.10884350442937914, -0.010751817996585653, 0.06435990254174496, -0.19169710930244196];
pub const M_X: [f64; 12] = [0.6533991865298505, 0.25482771826673045, 0.02255814823377056, 0.723245176116759, 0.5678788181653596, 0.20377095512090382, 0.6635522413214193, 0.36842555991555503, 0.5342644691422633, 0.33776689182245623, 0.22106254328026265, 0.0990087781973914];
pub const M_L: [f64; 12] = [0.09063858521047485, 0.044136164346052054, 0.35419566320209117, 0.0778234271492595, 0.10220944043628466, 0.8431037812648291, 0.25444508559924006, 0.22184426102342203, 0.1120678083079707, 0.11824619306938167, 0.6089001096445311, 0.4952865790234595];
pub const M_W: [f64; 12] = [0.8558275760932558, 0.17139941905287737, 0.40352443568128293, 0.5487960754606586, 0.6995124723189587, 0.18781217440564302, 0.6437841137481529, 0.6735477651848458, 0.8802806565896981, 0.019457760313890793, 0.28483472087222006, 0.9225729643169474];
pub const M_U: [f64; 12] = [0.45949159095777115, 0.27993412339801066, 0.2644645473891073, -0.13586096501206704, -0.7058183564705018, -0.2171571453221316, 0.15251926295645654, 0.05633582975086602, 0.8639610871313158, -0.0012346350093475555, -0.25993798516590066, -0.003861627635938834];
pub const M_RHO: f64 = 0.9;
pub const M_TAU_L: f64 = 0.5;
pub const M_TAU_W: f64 = 0.4;
pub const M_LAMBDA_W: f64 = 0.05;
pub const M_LAMBDA_L: [f64; 12] = [0.06190931875203176, 0.11306981684916247, 0.29326506737039015, -0.1995103977305708, -0.27770169617977786, 0.22576597852106967, 0.008454919308893449, 0.004813072611081536, 0.10887416640036422, -0.21240617217991714, -0.008190088590682518, 0.002043447980732886];
pub const M_L_NEW: [f64; 12] = [0.021045560524034748, 0.0634087033472675, 0.06167616461266873, 0.051102241336080066, 0.07348045160587957, 0.2213911172562681, 0.21534196838719388, 0.17842317704769392, 0.07394034359133908, 0.22277673748930893, 0.2166897288218402, 0.17953987390177115];
pub const M_LAMBDA_W_AT_L_NEW: [f64; 12] = [0.26519536157542595, 0.02917761912219887, -0.012407547804534071, -0.30530759134008073, -0.46117635919781746, 0.003999333408381941, 0.004395252186131406, 0.0001080474927132183, 0.4165229323019689, -0.013123196185098664, -0.0012766312371890372, -0.00015659969340988325];
pub const M_W_NEW: [f64; 12] = [0.7275272092408631, 0.1375061491817756, 0.3862652325808743, 0.6486968897744686, 0.8617607937758635, 0.163990218820068, 0.6198037906514781, 0.6512823239655383, 0.6914492614466883, 0.0024848165657080333, 0.2631231511448735, 0.9004133819720891];
pub const M_U_NEW: [f64; 12] = [0.3044223494557534, 0.1313461724300638, 0.28607182540488785, -0.34837427816617916, -0.7673290704470248, -0.20389958022010488, -0.0008477991281365116, -0.0032956407043554722, 0.7361310731099352, -0.10446861741283785, -0.2628379883307761, 0.003356209884614249];
pub const M_LAGRANGIAN: f64 = 2.3133675823796365;
pub const E_X: [f64; 12] = [0.24637476605862607, 0.8390425427753962, 0.1509268342551494, 0.406144309336668, 0.39180403974727196, 0.3198110151175577, 0.06492871408187839, 0.9437162186429165, 0.582120034486257, 0.16861955643834103, 0.7559979717669044, 0.33751916845139374];
pub const E_L: [f64; 12] = [0.6205059204596148, 0.21603427157093802, 0.8160379803417616, 0.9022536967934592, 0.10705741850499195, 0.29638974513410754, 0.38793884542775425, 0.5598497530713505, 0.7062160163971596, 0.7270435065290743, 0.49354736979558433, 0.33429484902737905];
pub const E_W: [f64; 12] = [0.484426838707412, 0.6060766605446334, 0.3433668181932754, 0.5774376344789259, 0.8264539076147769, 0.5407076725480446, 0.8416715846543179, 0.8846566914692788, 0.4055907229376563, 0.2965771179238931, 0.9384594743019987, 0.7574140996832819];
pub const E_E: [f64; 12] = [-0.0167337132460571, 0.03577362534177749, -0.07293892628438496, -0.11779056835180107, 0.03150820258571137, -0.08808400632818886, -0.08301181081638911, 0.1593707522396955, -0.04637069996046389, -0.12246050250735585, -0.08882483285500907, -0.0387776691020127];
pub const E_UX: [f64; 12] = [0.24421530126717655, -0.15902734143653754, 0.06564664595108814, -0.5746158773717125, 0.09452540265428586, 0.029747715522275266, -0.05360803444721646, 0.20089070017009272, -0.1178861129818242, 0.288362922375543, -0.23909738548845924, 0.25352034416843466];
pub const E_ZH: [f64; 12] = [-0.12298103668081839, -0.2635842010058595, -0.28719166799469015, 0.035628865839138206, 0.08131392153280435, 0.09282037618265232, 0.11185435676106786, -0.1954008322762487, 0.22974918648405818, 0.07274078352052815, 0.11256248314348599, 0.1378369865148756];
pub const E_ZV: [f64; 12] = [-0.3481148194373433, 0.009203938599782807, -0.2065231735688085, -0.07190498275069937, 0.22692393801940686, 0.13943505905124662, 0.04962899812612721, -0.11832204666739272, -0.28546315832366326, 0.024148545291175275, 0.27886977064339147, -0.10616903647854528];
pub const E_ZD: [f64; 12] = [0.23169962207038075, -0.19038909433557938, 0.008425084748124775, 0.2815889019139464, 0.26418404197576595, -0.12202248334143835, 0.22006885571379897, -0.3328645314674526, 0.14877971233983972, 0.11466787774518868, -0.08033419523208614, -0.03113174469750036];
pub const E_UZH: [f64; 12] = [-0.21581999298479593, 0.11085322057226195, -0.00881541532900539, 0.030687494501491254, -0.01194118961340877, -0.03812892096864363, 0.21692750788021375, 0.2092204297838939, -0.39399669516432556, 0.0046555315560904845, 0.20761558917169443, 0.024837227902654583];
pub const E_UZV: [f64; 12] = [0.07037000372057627, 0.17535787770401245, -0.08887134099943435, 0.02142032683727436, -0.05743002828498598, -0.3400587523936816, -0.14704541688337722, -0.11197308055775604, -0.23413960866826222, 0.036096288331163955, -0.08736682400867933, -0.27561233319274087];
pub const E_UZD: [f64; 12] = [0.11691426459465236, 0.13513889297450213, 0.0015330765028553173, 0.252042069537807, -0.19877440028487448, 0.1390067604566236, -0.432482946778497, 0.1719989702014521, 0.08872600496911293, 0.013677476280228277, -0.12962208389350044, -0.23677267613162503];
pub const E_RHO_X: f64 = 0.9;
pub const E_RHO_Z: f64 = 1.7;
pub const E_TAU_L: f64 = 0.5;
pub const E_TAU_W: f64 = 0.4;
pub const E_LAMBDA_W: f64 = 0.05;
pub const E_LAMBDA_Z: f64 = 0.03;
pub const E_LAMBDA_E: f64 = 0.08;
pub const E_PSI_L: [f64; 12] = [0.23072342541615465, -0.15218870513830254, 0.2867752439321013, -0.2309791378651139, 0.015119294667369908, -0.030216014892352233, -0.01447669711470725, 0.039021357920592636, -0.06157572903679935, 0.415547721045024, -0.022809376907599297, 0.058737185227754056];
pub const E_L_NEW: [f64; 12] = [0.3305430563793463, 0.2988220151791266, 0.5129357744790577, 0.5703447081686553, 0.21258961367957505, 0.22497589046031274, 0.29705838718138583, 0.26855075056100774, 0.4609743600831082, 0.5125676545798569, 0.191053862885242, 0.20218538518666795];
pub const E_PSI_W: [f64; 12] = [-0.02508312122985535, -0.19109161026775576, -0.08605273745022793, 0.11278395773465125, 0.018895377027715547, -0.009349608513945885, 0.02456479076579308, 0.20572752438918918, -0.0302095374577465, -0.15129716444531016, -0.21990763092895368, 0.0284311288633177];
pub const E_W_UNCLAMPED: [f64; 12] = [0.6496863175306492, 0.600075795109846, 0.5743810921184503, 0.44633274482760893, 0.5198614720514765, 0.5866031360436035, 0.7194463369255857, 0.7327188543944453, 0.6222368951663337, 0.506843044101231, 0.6404714692984953, 0.7084568935987361];
pub const E_W_NEW: [f64; 12] = [0.6496863175306492, 0.600075795109846, 0.5743810921184503, 0.44633274482760893, 0.5198614720514765, 0.5866031360436035, 0.7194463369255857, 0.7327188543944453, 0.6222368951663337, 0.506843044101231, 0.6404714692984953, 0.7084568935987361];
pub const E_Z_NEW_H: [f64; 12] = [0.04293786900258274, -0.2022664125149799, -0.04078882395163775, 0.1108461560186818, 0.1285782022114815, 0.0314939557774913, -0.21191421389957096, -0.3344000702826326, 0.2336696248016012, 0.18364760495574356, -0.0374887670581552, 0.007881719015307542];
pub const E_Z_NEW_V: [f64; 12] = [-0.07565766776359759, -0.04946124475413706, -0.06264662200071267, 0.10470542368182395, 0.0944485707883158, 0.11692904337174378, 0.09404510678731669, 0.050401508076037695, 0.02087657565652133, 0.08695094011778091, 0.10371076742502193, 0.07687466122872517];
pub const E_Z_NEW_D: [f64; 12] = [0.0008204884762197354, 0.049099506090304765, 0.03882099564013839, -0.07958441495029177, 0.22317992803400277, 0.03516398546137998, 0.17404711611917564, -0.2240716864730552, -0.09351330968966158, -0.06330661418381843, -0.038539763049237376, 0.014228740293469934];
pub const E_E_NEW: [f64; 12] = [-0.21194674958181925, 0.30385542211598604, -0.1381296786159994, 0.45866081296016226, -0.0, 0.0, -0.0, -0.0, 0.0878600471906177, -0.40113475526168874, 0.3798883981596497, -0.15334475083533827];
pub const E_UX_NEW: [f64; 12] = [0.08000000000000004, -0.08000000000000002, 0.08000000000000002, -0.07999999999999996, 0.017082427006930703, -0.005536373291321846, 0.005004312639483373, 0.038477600366073866, -0.07999999999999999, 0.08000000000000002, -0.07999999999999999, 0.08000000000000004];
pub const E_UZ_NEW_H: [f64; 12] = [-0.014806732479667212, 0.02836350477659913, 0.014526938067066, -0.01933370533394043, -0.014060483168483847, -0.007492716559520687, 0.021929395241671423, 0.02472918780188274, -0.027757109026278204, -0.025887084164904046, 0.009627410206776932, -0.0030091831240282203];
pub const E_UZ_NEW_V: [f64; 12] = [0.026089856637825835, 0.006935873506613982, 0.02231159199378452, -0.018262643298055322, -0.010328286731465026, -0.027818549875101295, -0.009732015042000164, -0.0037272371314306524, -0.0024798832415014183, -0.012256660279283065, -0.026633740696551403, -0.02935018779349874];
pub const E_UZ_NEW_D: [f64; 12] = [-0.0002829379671660942, -0.006885147455798574, -0.013826096090311187, 0.013881055357153393, -0.02440551794700177, -0.008365852102755894, -0.018010816404506413, 0.01657030398107709, 0.011108243678090005, 0.008923740932894542, 0.009897314242728023, -0.0054324297890007145];
pub const E_LAGRANGIAN: f64 = 6.482065199476665;
pub const OTSU_VALUES: [f64; 240] = [0.04527618281647384, 0.11235054851818299, 0.22667731606724326, 0.23392431508226097, 0.19430773161730935, 0.22899605374962398, 0.29141134466136553, 0.12971771096791818, 0.19031602576311177, 0.19109946597461128, 0.2180491738809906, 0.22700896161496847, 0.1679747092756877, 0.1632837560852939, 0.26175414772950095, 0.24404177704318786, 0.08341314206337545, 0.18533171272544982, 0.017454693375892838, 0.17847853381588716, 0.07432984306472107, 0.2343935060400173, 0.11840758260844768, 0.1756092907487263, 0.2526825022053339, 0.04990040976964109, 0.10979272663532771, 0.10095305560483472, 0.29760470460265287, 0.23576901732218614, 0.058648405597650485, 0.08669307849178327, 0.1918371414704706, 0.18479122464241945, 0.20765477625481948, 0.2503176912306499, 0.05486695462193899, 0.08298358158314541, 0.2713263654140923, 0.02233196651245135, 0.14586123905659146, 0.29812110620738863, 0.1606263924529069, 0.14673306089343108, 0.08969849068690504, 0.10025708561416838, 0.13462380957929998, 0.09992950557996164, 0.2767916324560338, 0.0036606085049379674, 0.29481065376612325, 0.019231387818535405, 0.19532107283872246, 0.16630049422941803, 0.18199157250222503, 0.18615675673996143, 0.26348880328551016, 0.10583968623395242, 0.18441715133821532, 0.07825859093437726, 0.22023971201164813, 0.26755655999529027, 0.038265871883886304, 0.037518069068611944, 0.1104217492437568, 0.03899395760397397, 0.14200824369614612, 0.08317934784693967, 0.2921377097355045, 0.17706226586642393, 0.05071702862483746, 0.2153798583866162, 0.00306614309827683, 0.20544081504310466, 0.09569996960304293, 0.10587326312813573, 0.2632834453255297, 0.1318693229354266, 0.1303685197783246, 0.21057851501075184, 0.05736731753363684, 0.015139894133443342, 0.0550928439120245, 0.08267114931402887, 0.195103976058115, 0.2229244412783055, 0.2087785278828778, 0.21297194105612735, 0.25260840823954195, 0.13406553707233448, 0.13452870379582707, 0.07023075055349944, 0.08573625763689444, 0.1563081625801866, 0.1681488156572115, 0.2885135282201463, 0.18864598309319872, 0.19655433258434318, 0.2554840694195079, 0.27940426655669715, 0.11544340647274015, 0.19867407112827423, 0.06627339073126022, 0.24006540887546965, 0.03862617159133109, 0.18291757744693823, 0.2615008094776359, 0.20101070789639466, 0.2478352228082985, 0.18199011737748613, 0.10899947653197796, 0.26975961922211933, 0.2540980111895925, 0.035403599080281, 0.07641244393004294, 0.19869694810733898, 0.2160394111900911, 0.12663693912883636, 0.09406444999184538, 0.1607311336044919, 0.17482082086441078, 0.005062780244820209, 0.29141765947721926, 0.2692046613154582, 0.1610612797398185, 0.06056501168635983, 0.1532025346092355, 0.002054251347435865, 0.005427207032226977, 0.2590981281038817, 0.10918610084915946, 0.1633059012362116, 0.019236672233297048, 0.11519904765266507, 0.08771679761750205, 0.024617572324580828, 0.2969202233651553, 0.06996837870894052, 0.2712399623361166, 0.16577524866662618, 0.13766648242306953, 0.1063362717338202, 0.0923948443223915, 0.2770132712508953, 0.24337162000280782, 0.036209193930563474, 0.27998457565006013, 0.17021597955325182, 0.07708872950256891, 0.10206964901884387, 0.644067055603202, 0.6973797830919164, 0.7441310660140759, 0.9299289900468519, 0.9038052003531543, 0.6272288758272396, 0.9377867709771739, 0.862002693356497, 0.8728010926860159, 0.8344945284851499, 0.7806990703662979, 0.7888453452065416, 0.9415843426884326, 0.5734698223003192, 0.6982470738783323, 0.9046799552553445, 0.7090712468581718, 0.567519540537013, 0.5573365400237202, 0.8094745705214599, 0.8632902685648773, 0.7309413928438618, 0.9443228561177579, 0.7003277152062349, 0.8599568417048078, 0.8298491043320606, 0.7403667713503554, 0.9381412971240508, 0.8920850682504741, 0.8310284334111349, 0.6796297602649303, 0.6268185778801405, 0.6100494083737645, 0.9409850190849174, 0.6844082770054404, 0.6733455968883604, 0.756314094957703, 0.8316596213800809, 0.673026197310275, 0.8759410812070654, 0.7038677485575331, 0.8950974278468031, 0.7263964177403675, 0.6755638695730979, 0.6974169316942522, 0.845556554373947, 0.9139150497663229, 0.5670489167456142, 0.5585898658595114, 0.6521712688967123, 0.6930917664246949, 0.6161795078795174, 0.5519655603530492, 0.6997741983946539, 0.6151264343968104, 0.8722135025828703, 0.9356066153787985, 0.6869905093022174, 0.8196268830047622, 0.5562618015277487, 0.6029413109036991, 0.8509298773590122, 0.8520636566877695, 0.7716565088122114, 0.7724174906768592, 0.7358203471413576, 0.5907357783198046, 0.6711906515093757, 0.71885883749393, 0.6898232004772084, 0.7991383539969719, 0.9089388898780926, 0.8912579258663986, 0.6824080663294317, 0.5781109494008926, 0.6822473746183703, 0.5994324707003642, 0.6053245050735071, 0.8203404616467835, 0.6562020404204831, 0.6632911652596045, 0.9482848358211078, 0.8850038228825363, 0.6494537938042557, 0.5761173973544278, 0.8586084405385594, 0.5539759170278009, 0.8449051604790487, 0.7332238582064972, 0.8134253031615397];
pub const OTSU_THRESHOLD: f64 = 0.30144752221605864;
pub const METRIC_PRED: [f64; 64] = [1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0];
pub const METRIC_TRUTH: [f64; 64] = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0];
pub const METRIC_RE: f64 = 0.47619047619047616;
pub const METRIC_PRE: f64 = 0.3125;
pub const METRIC_F1: f64 = 0.37735849056603776;
pub const PSNR_A: [f64; 30] = [0.5847031339259292, 0.3840988281886919, 0.727166036640589, 0.8725641222107492, 0.8336189414434874, 0.051863658168538995, 0.031319438268026856, 0.9211465465891074, 0.9943516741232972, 0.6003053786418876, 0.14581522434458294, 0.2959132516013917, 0.5293621124441203, 0.07971031222990077, 0.6367081488070948, 0.5692993050618524, 0.6875846591947528, 0.5084078378966512, 0.4627844015771264, 0.8962041114221904, 0.34175934923939444, 0.3940680930188539, 0.8751491921241286, 0.3970674821812351, 0.28438946998715764, 0.0019719643474351845, 0.30231025906756914, 0.7983282655781978, 0.7657029866775223, 0.469015340260435];
pub const PSNR_B: [f64; 30] = [0.6554444200544403, 0.3542977736601042, 0.750911725181386, 0.8620574191892166, 0.775726298390064, 0.038179647738508855, 0.0, 0.795693185469095, 0.9949006254585012, 0.5969608512586746, 0.10161649692983801, 0.26607922408963064, 0.5958246629830306, 0.12154540646720557, 0.7714660302479139, 0.5868581545021723, 0.6526331085281375, 0.550582715951339, 0.46266109242114667, 0.8661840628860925, 0.2476511867910527, 0.3366489778274554, 0.8630640700722286, 0.43720451870587557, 0.1823196397745645, 0.0, 0.3870236822103679, 0.7996538942496297, 0.6915942651370257, 0.5230906072428383];
pub const PSNR_DB: f64 = 24.852581478553134;
