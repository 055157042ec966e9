// Generated by tools/gen_daubechies.py. Do not edit.
#![allow(clippy::excessive_precision, clippy::approx_constant)]

/// Minimum-phase Daubechies scaling filters, indexed by `order - 1`.
pub(crate) static DAUBECHIES: [&[f64]; 45] = [
    &[
        7.071067811865475244e-1,
        7.071067811865475244e-1,
    ],
    &[
        4.8296291314453414337e-1,
        8.3651630373780790558e-1,
        2.2414386804201338103e-1,
        -1.2940952255126038117e-1,
    ],
    &[
        3.32670552950082616e-1,
        8.0689150931109257649e-1,
        4.598775021184915701e-1,
        -1.350110200102545887e-1,
        -8.5441273882026661693e-2,
        3.5226291885709536603e-2,
    ],
    &[
        2.3037781330889650086e-1,
        7.1484657055291564709e-1,
        6.3088076792985890788e-1,
        -2.7983769416859854211e-2,
        -1.8703481171909308408e-1,
        3.0841381835560763627e-2,
        3.2883011666885199735e-2,
        -1.0597401785069032105e-2,
    ],
    &[
        1.6010239797419291448e-1,
        6.0382926979718967054e-1,
        7.2430852843777292773e-1,
        1.3842814590132073151e-1,
        -2.4229488706638203186e-1,
        -3.2244869584638374648e-2,
        7.7571493840045713523e-2,
        -6.2414902127982742742e-3,
        -1.2580751999081999469e-2,
        3.335725285473771278e-3,
    ],
    &[
        1.1154074335010946362e-1,
        4.9462389039845308568e-1,
        7.5113390802109535068e-1,
        3.1525035170919762909e-1,
        -2.2626469396543982008e-1,
        -1.2976686756726193556e-1,
        9.7501605587323049102e-2,
        2.7522865530305728626e-2,
        -3.1582039317486029565e-2,
        5.5384220116149613925e-4,
        4.7772575109455106396e-3,
        -1.0773010853084795649e-3,
    ],
    &[
        7.785205408500917902e-2,
        3.9653931948191730654e-1,
        7.2913209084623511992e-1,
        4.6978228740519312247e-1,
        -1.4390600392856497541e-1,
        -2.2403618499387498264e-1,
        7.1309219266830264751e-2,
        8.0612609151083071913e-2,
        -3.802993693501441358e-2,
        -1.6574541630666880654e-2,
        1.2550998556099840613e-2,
        4.2957797292136652113e-4,
        -1.8016407040474909153e-3,
        3.5371379997452024845e-4,
    ],
    &[
        5.4415842243104009955e-2,
        3.1287159091429997066e-1,
        6.7563073629728980681e-1,
        5.8535468365420671277e-1,
        -1.5829105256349305667e-2,
        -2.8401554296154692652e-1,
        4.7248457391328277036e-4,
        1.2874742662047845886e-1,
        -1.736930100180754617e-2,
        -4.4088253930794751507e-2,
        1.3981027917398281649e-2,
        8.7460940474057767164e-3,
        -4.8703529934515743104e-3,
        -3.917403733769470463e-4,
        6.7544940645056936637e-4,
        -1.1747678412476953373e-4,
    ],
    &[
        3.8077947363878346589e-2,
        2.4383467461259035373e-1,
        6.048231236901111119e-1,
        6.5728807805130053808e-1,
        1.3319738582500757619e-1,
        -2.9327378327917490881e-1,
        -9.6840783222976460514e-2,
        1.4854074933810638014e-1,
        3.0725681479333379212e-2,
        -6.7632829061329973676e-2,
        2.5094711483145195759e-4,
        2.2361662123679097205e-2,
        -4.7232047577513972779e-3,
        -4.2815036824634298345e-3,
        1.8476468830562264766e-3,
        2.3038576352319596721e-4,
        -2.5196318894271013697e-4,
        3.9347320316271599481e-5,
    ],
    &[
        2.6670057900555553587e-2,
        1.8817680007769148902e-1,
        5.2720118893172558648e-1,
        6.8845903945360356574e-1,
        2.8117234366057746075e-1,
        -2.4984642432731537942e-1,
        -1.959462743773770435e-1,
        1.2736934033579326008e-1,
        9.305736460357235116e-2,
        -7.1394147166397087145e-2,
        -2.9457536821875812858e-2,
        3.321267405934100174e-2,
        3.6065535669561696554e-3,
        -1.0733175483330575044e-2,
        1.3953517470529011658e-3,
        1.9924052951850561172e-3,
        -6.8585669495971162656e-4,
        -1.1646685512928545095e-4,
        9.3588670320069591334e-5,
        -1.3264202894521244812e-5,
    ],
    &[
        1.8694297761471084025e-2,
        1.440670211506245128e-1,
        4.4989976435604533477e-1,
        6.8568677491620051112e-1,
        4.1196436894790746293e-1,
        -1.6227524502749036224e-1,
        -2.742308468179469612e-1,
        6.6043588196683191901e-2,
        1.4981201246637849641e-1,
        -4.6479955116684187272e-2,
        -6.6438785695025205279e-2,
        3.1335090219046076031e-2,
        2.0840904360181063023e-2,
        -1.5364820906201599426e-2,
        -3.3408588730144456061e-3,
        4.9284176560590411232e-3,
        -3.0859285881514316518e-4,
        -8.9302325066626461339e-4,
        2.4915252355282349887e-4,
        5.4439074699368471674e-5,
        -3.4634984186984995541e-5,
        4.4942742772365100954e-6,
    ],
    &[
        1.3112257957229517507e-2,
        1.0956627282118515461e-1,
        3.7735513521421265709e-1,
        6.571987225793070893e-1,
        5.1588647842781560876e-1,
        -4.4763885653774626668e-2,
        -3.1617845375278553686e-1,
        -2.3779257256069727684e-2,
        1.8247860592757967985e-1,
        5.3595696743521503283e-3,
        -9.6432120096507082027e-2,
        1.0849130255822184381e-2,
        4.1546277495084440739e-2,
        -1.221864906974828072e-2,
        -1.2840825198300683295e-2,
        6.7114990087955091778e-3,
        2.2486072409952376e-3,
        -2.1795036186277604716e-3,
        6.5451282125095955665e-6,
        3.8865306282093144359e-4,
        -8.8504109208204324208e-5,
        -2.424154575703078403e-5,
        1.2776952219379766587e-5,
        -1.5290717580685109027e-6,
    ],
    &[
        9.202133538962367973e-3,
        8.2861243872902779644e-2,
        3.119963221604380634e-1,
        6.1105585115878765282e-1,
        5.8888957043121890807e-1,
        8.698572617964723731e-2,
        -3.14972907711388633e-1,
        -1.2457673075081525894e-1,
        1.7947607942933984323e-1,
        7.2948933656777163809e-2,
        -1.0580761818793432645e-1,
        -2.648840647534369464e-2,
        5.6139477100283428862e-2,
        2.3799722540590788115e-3,
        -2.3831420710323649032e-2,
        3.9239414487974162433e-3,
        7.2555894016175661945e-3,
        -2.761911234656862178e-3,
        -1.3156739118922989366e-3,
        9.3232613086726338622e-4,
        4.9251525126289461921e-5,
        -1.6512898855650548946e-4,
        3.0678537579325493466e-5,
        1.0441930571408137082e-5,
        -4.7004164793608683257e-6,
        5.2200350984548646917e-7,
    ],
    &[
        6.4611534600879478182e-3,
        6.2364758849398898328e-2,
        2.5485026779262135367e-1,
        5.5430561794089383599e-1,
        6.3118784910485677956e-1,
        2.1867068775890652149e-1,
        -2.7168855227874804141e-1,
        -2.1803352999327604476e-1,
        1.3839521386480659107e-1,
        1.3998901658446070125e-1,
        -8.6748411568169689046e-2,
        -7.1548955504046130736e-2,
        5.5237126259216044116e-2,
        2.6981408307912916974e-2,
        -3.0185351540390635187e-2,
        -5.6150495303569591332e-3,
        1.2789493266333408962e-2,
        -7.4621898926838493718e-4,
        -3.8496388680221874458e-3,
        1.061691085606761843e-3,
        7.0802115423552785864e-4,
        -3.8683194731295448211e-4,
        -4.1777245770372597353e-5,
        6.8755042526975096039e-5,
        -1.0337209184570773947e-5,
        -4.3897049017813941153e-6,
        1.7249946753678127699e-6,
        -1.7871399683113590763e-7,
    ],
    &[
        4.5385373615788988815e-3,
        4.6743394892766271892e-2,
        2.0602386398699573154e-1,
        4.9263177170813962361e-1,
        6.4581314035742435818e-1,
        3.3900253545473152769e-1,
        -1.9320413960914542871e-1,
        -2.8888259656696564625e-1,
        6.5282952848772816923e-2,
        1.9014671400712298235e-1,
        -3.9666176555790944484e-2,
        -1.1112093603723169337e-1,
        3.3877143923507686209e-2,
        5.4780550584507612689e-2,
        -2.5767007328439962586e-2,
        -2.0810050169693081678e-2,
        1.5083918027835902363e-2,
        5.1010003604075431697e-3,
        -6.4877345603157449952e-3,
        -2.4175649076162428117e-4,
        1.9433239803822115418e-3,
        -3.7348235413761699201e-4,
        -3.5956524436246881216e-4,
        1.5589648992059974795e-4,
        2.5792699155318936809e-5,
        -2.8133296266047813648e-5,
        3.3629871817375798031e-6,
        1.8112704079405770838e-6,
        -6.3168823258816644212e-7,
        6.1333599133057520291e-8,
    ],
    &[
        3.1892209253477380298e-3,
        3.490771432367334641e-2,
        1.650642834888531179e-1,
        4.3031272284600381374e-1,
        6.3735633208378889863e-1,
        4.4029025688635690004e-1,
        -8.9751089402489642857e-2,
        -3.2706331052791770465e-1,
        -2.7918208133028276683e-2,
        2.1119069394710428872e-1,
        2.7340263752716041365e-2,
        -1.3238830556381039045e-1,
        -6.2397227524748717657e-3,
        7.5924236044276315821e-2,
        -7.5889743688577376385e-3,
        -3.6888397691730142334e-2,
        1.0297659640955969412e-2,
        1.399376885982873103e-2,
        -6.9900145634139166703e-3,
        -3.6442796214983899322e-3,
        3.1280233812062688317e-3,
        4.0789698084971283624e-4,
        -9.4102174935956758893e-4,
        1.1424152003872239264e-4,
        1.7478724522533818038e-4,
        -6.1035966214109358352e-5,
        -1.3945668988208893452e-5,
        1.1336608661276258588e-5,
        -1.0435713423116065015e-6,
        -7.3636567854512055121e-7,
        2.3087840868575458664e-7,
        -2.109339630100743097e-8,
    ],
    &[
        2.2418070010373128535e-3,
        2.5985393703606043389e-2,
        1.3121490330782440658e-1,
        3.7035072415264115045e-1,
        6.1099661568462281819e-1,
        5.1831576405693783933e-1,
        2.7314970403293635004e-2,
        -3.2832074836396173609e-1,
        -1.2659975221588270287e-1,
        1.9731058956501099279e-1,
        1.0113548917747027215e-1,
        -1.2681569177828631109e-1,
        -5.7091419631676927289e-2,
        8.110598665416088508e-2,
        2.2312336178103795953e-2,
        -4.6922438389269737333e-2,
        -3.2709555358192937817e-3,
        2.2733676583946270318e-2,
        -3.0429899813546370686e-3,
        -8.6029215203228548317e-3,
        2.9679966915260948728e-3,
        2.3012052421535456243e-3,
        -1.4368453048029761262e-3,
        -3.281325194098379714e-4,
        4.3946542776864367784e-4,
        -2.5610109566548458827e-5,
        -8.2048032024533918391e-5,
        2.3186813798745950845e-5,
        6.9906009850767512732e-6,
        -4.5059424772229881941e-6,
        3.0165496099945574156e-7,
        2.957700933316856755e-7,
        -8.4239484460026801788e-8,
        7.2674929685616081109e-9,
    ],
    &[
        1.5763102184407604315e-3,
        1.9288531724146377059e-2,
        1.0358846582242359622e-1,
        3.1467894133703169906e-1,
        5.7182680776660722348e-1,
        5.7180165488865133529e-1,
        1.4722311196992814158e-1,
        -2.9365404073655874425e-1,
        -2.1648093400514297112e-1,
        1.4953397556537778935e-1,
        1.6708131276325740451e-1,
        -9.2331884150846280604e-2,
        -1.0675224665982848559e-1,
        6.4887216211905442819e-2,
        5.7051247738536884121e-2,
        -4.4526141902982324716e-2,
        -2.3733210395860001033e-2,
        2.66707059264705903e-2,
        6.2621679543057074852e-3,
        -1.3051480946612001773e-2,
        1.1863003385811746573e-4,
        4.9433436054667381307e-3,
        -1.1187326669924970728e-3,
        -1.3405962983361066295e-3,
        6.2846568296514571256e-4,
        2.135815619103406884e-4,
        -1.9864855231174794858e-4,
        -1.5359171235347246751e-7,
        3.7412378807400381811e-5,
        -8.5206025374466952039e-6,
        -3.3326344788858218888e-6,
        1.7687129836276154559e-6,
        -7.691632689885176146e-8,
        -1.1760987670282316985e-7,
        3.0688358630451748009e-8,
        -2.5079344549485982672e-9,
    ],
    &[
        1.1086697631817105711e-3,
        1.4281098450764397374e-2,
        8.1278113265459550653e-2,
        2.6438843174089678467e-1,
        5.2443637746465491534e-1,
        6.0170454912753789489e-1,
        2.6089495265103882929e-1,
        -2.2809139421548264637e-1,
        -2.8583863175582624185e-1,
        7.4652269708103266368e-2,
        2.1234974330627848881e-1,
        -3.3518541902302878682e-2,
        -1.4278569503873657498e-1,
        2.758435062562866875e-2,
        8.6906755555812232488e-2,
        -2.6501236250123040899e-2,
        -4.5674226277230908056e-2,
        2.162376740958504713e-2,
        1.9375549889176127646e-2,
        -1.3988388678535141633e-2,
        -5.8669222810121747266e-3,
        7.040747367105243153e-3,
        7.6895435925754835597e-4,
        -2.687551800701582004e-3,
        3.4180865345859577657e-4,
        7.3580252050543520703e-4,
        -2.6067613567862800573e-4,
        -1.2460079173415877534e-4,
        8.7112704672199229654e-5,
        5.105950487073886053e-6,
        -1.6640176297154944546e-5,
        3.0109643162965263397e-6,
        1.5319314766911930639e-6,
        -6.8627556577691427019e-7,
        1.4470882987978445421e-8,
        4.6369377757826042234e-8,
        -1.1164020670358258164e-8,
        8.6668488389976193503e-10,
    ],
    &[
        7.7995361366684632159e-4,
        1.0549394624950398325e-2,
        6.3423780459081514976e-2,
        2.1994211355139704501e-1,
        4.7269618531090169637e-1,
        6.1049323893859382016e-1,
        3.6150229873933106292e-1,
        -1.3921208801148387258e-1,
        -3.267868004340349674e-1,
        -1.6727088309077007575e-2,
        2.2829105081991632297e-1,
        3.9850246457771202198e-2,
        -1.5545875070726795593e-1,
        -2.4716827338613584016e-2,
        1.0229171917444255789e-1,
        5.632246857307435507e-3,
        -6.1722899624680459733e-2,
        5.8746818118118264913e-3,
        3.2294299530769581759e-2,
        -8.7893249239015613488e-3,
        -1.3810526137151920078e-2,
        6.7216273022594568353e-3,
        4.4205423870457909631e-3,
        -3.5814942596096227776e-3,
        -8.3156217282255691925e-4,
        1.3925596193231363239e-3,
        -5.3497598439976950518e-5,
        -3.8510474869921760607e-4,
        1.0153288973670290508e-4,
        6.774280828377729558e-5,
        -3.7105861833947128642e-5,
        -4.3761438621839968104e-6,
        7.2412482876736201028e-6,
        -1.0119940100188861503e-6,
        -6.8470795970005568942e-7,
        2.6339242262700010841e-7,
        2.0143220235505126943e-10,
        -1.8148432482996959732e-8,
        4.0561270555518327661e-9,
        -2.9988364896193195664e-10,
    ],
    &[
        5.4882250985268370868e-4,
        7.7766390523547837543e-3,
        4.9247771538177274914e-2,
        1.8135962544038151563e-1,
        4.1968794493936277309e-1,
        6.0150609493500389756e-1,
        4.4459045192760034036e-1,
        -3.5722919617255290459e-2,
        -3.3566408953052950948e-1,
        -1.1239707156845098135e-1,
        2.1156452768087239238e-1,
        1.152332984396871042e-1,
        -1.3994042493254722492e-1,
        -8.1775942980863828874e-2,
        9.6600390323724220702e-2,
        4.5723405749228792393e-2,
        -6.4977504893732320633e-2,
        -1.8653859202118515341e-2,
        3.9726835427850441752e-2,
        3.3577563903381108425e-3,
        -2.0892053677979079488e-2,
        2.4034709208054347624e-3,
        8.9888243819719118753e-3,
        -2.8913343485889012474e-3,
        -2.9583740389328312808e-3,
        1.7166070406306241385e-3,
        6.3941850051203021464e-4,
        -6.9067111708210165073e-4,
        -3.1964062776804371937e-5,
        1.9366465041650806153e-4,
        -3.6355202500863383094e-5,
        -3.499665984987447954e-5,
        1.5354825092760492831e-5,
        2.7903305398144870461e-6,
        -3.0900171645456991972e-6,
        3.1660954423670305566e-7,
        2.9921366304648527944e-7,
        -1.000400879030597332e-7,
        -2.2540149746733301316e-9,
        7.058033541231121859e-9,
        -1.4719541976503652652e-9,
        1.038805571023706553e-10,
    ],
    &[
        3.8626323149109821585e-4,
        5.7218546313345391208e-3,
        3.8069937236411084948e-2,
        1.483675408901114285e-1,
        3.6772868344603747886e-1,
        5.7843273100952442714e-1,
        5.0790109062216390184e-1,
        7.3724501183630151656e-2,
        -3.127265804282961918e-1,
        -2.0056840610488709393e-1,
        1.6409318810676648186e-1,
        1.7997318799289130373e-1,
        -9.7110798409114709693e-2,
        -1.3176813768668341075e-1,
        6.8076314392732215567e-2,
        8.4557376366826075034e-2,
        -5.1364254297444132457e-2,
        -4.6530811827506713479e-2,
        3.6970846620698020576e-2,
        2.0586707627565360441e-2,
        -2.3480001344493188686e-2,
        -6.2137828493646584991e-3,
        1.2564725218343374069e-2,
        3.0013739850764359512e-4,
        -5.4556919861567170766e-3,
        1.0442607391860253234e-3,
        1.8270104956572790801e-3,
        -7.7069098812311962329e-4,
        -4.2378739983918007995e-4,
        3.286094142136787342e-4,
        4.345899904532003379e-5,
        -9.4052236348157604218e-5,
        1.1374349662125931727e-5,
        1.7373756957561893562e-5,
        -6.1667293164675783722e-6,
        -1.5651791319951601593e-6,
        1.2951820573188775739e-6,
        -8.7798798733612862769e-8,
        -1.2833362287517544178e-7,
        3.7612287493373623662e-8,
        1.6801714049229888856e-9,
        -2.7296231466329760834e-9,
        5.3359388216674899052e-10,
        -3.6021134843395547038e-11,
    ],
    &[
        2.7190419412828884142e-4,
        4.2027488931838335384e-3,
        2.9310003657884115147e-2,
        1.2051553178397193363e-1,
        3.1845081385286523634e-1,
        5.4493114787352042827e-1,
        5.5101851724191939135e-1,
        1.8139262536384001363e-1,
        -2.6139214803064411189e-1,
        -2.7140209860784305566e-1,
        9.2125407082418052606e-2,
        2.2357365824204023171e-1,
        -3.303744709428937875e-2,
        -1.6401132153187592502e-1,
        2.0283074575649299749e-2,
        1.122970436181072887e-1,
        -2.1126212356227241007e-2,
        -7.0207391574901109462e-2,
        2.1765856834499975608e-2,
        3.8495332522569199011e-2,
        -1.8523513650156159798e-2,
        -1.7537101003035845379e-2,
        1.2751943931528286462e-2,
        6.0318406500241628163e-3,
        -7.0753192737061528142e-3,
        -1.1348654733562516913e-3,
        3.1228764498181449974e-3,
        -2.4650140051635120319e-4,
        -1.0612312288866513211e-3,
        3.1942049270990115037e-4,
        2.5676245200787372056e-4,
        -1.5002185034903409677e-4,
        -3.3788948341209034343e-5,
        4.4260712031092460776e-5,
        -2.6352078892491862372e-6,
        -8.3478755678546255444e-6,
        2.3975695468402400574e-6,
        8.1475748347794477781e-7,
        -5.3390054052094211546e-7,
        1.8530917856339650194e-8,
        5.4175491795392787365e-8,
        -1.3999354954379988451e-8,
        -9.4728859018120505352e-10,
        1.0504464536965434041e-9,
        -1.9324051113134175422e-10,
        1.2502033023510409414e-11,
    ],
    &[
        1.914358009475513695e-4,
        3.0820817149054944362e-3,
        2.2482339949716410724e-2,
        9.7262235833625196638e-2,
        2.7290891606772632687e-1,
        5.0437104083992499198e-1,
        5.7493922109554199685e-1,
        2.8098555323371188334e-1,
        -1.872714068851562377e-1,
        -3.1794307899936273755e-1,
        4.776613684344728188e-3,
        2.392373887803108552e-1,
        4.2528729641483832581e-2,
        -1.7117535137034688969e-1,
        -3.8777173577920016202e-2,
        1.2101630346922423623e-1,
        2.098011370914481535e-2,
        -8.2161654208001667023e-2,
        -4.578436241819221638e-3,
        5.1301620039980879156e-2,
        -4.9447094281256282998e-3,
        -2.8213107094901890981e-2,
        7.6617218816465858973e-3,
        1.3049970871085735831e-2,
        -6.2914353700181877807e-3,
        -4.7465687863231138005e-3,
        3.7360461782825233452e-3,
        1.1537649368394815049e-3,
        -1.6964568189748243943e-3,
        -4.4161848561415200634e-5,
        5.8612705931831099337e-4,
        -1.1812332379695547406e-4,
        -1.4600798177626168389e-4,
        6.5593886393056340853e-5,
        2.1832414604665583634e-5,
        -2.0228882926126976829e-5,
        1.3411577508091147193e-8,
        3.9011003385977026104e-6,
        -8.9802531439384077241e-7,
        -4.0325077568799716241e-7,
        2.1663396532785746392e-7,
        -5.0576454197925003085e-10,
        -2.2557403881760861074e-8,
        5.157776789671999639e-9,
        4.7483758242562311181e-10,
        -4.0246586445843797743e-10,
        6.9918011576382309741e-11,
        -4.3427825038037102473e-12,
    ],
    &[
        1.3480297934701889946e-4,
        2.2569595918547795201e-3,
        1.7186741254040155338e-2,
        7.8035862872132675598e-2,
        2.3169350788602181999e-1,
        4.5968341514609459379e-1,
        5.8163689674605778335e-1,
        3.6788507480294669844e-1,
        -9.7174640964638142761e-2,
        -3.3647307964174613096e-1,
        -8.7587614587654661402e-2,
        2.2453781974510171295e-1,
        1.1815528671995986046e-1,
        -1.5056021375057963095e-1,
        -9.8508615289960221537e-2,
        1.0663380501847795288e-1,
        6.6752164494018606669e-2,
        -7.7084111056574193562e-2,
        -3.7173962861122508876e-2,
        5.3617909398779499606e-2,
        1.554260592910229164e-2,
        -3.4042320460653340993e-2,
        -3.0798367948470366616e-3,
        1.8922804476627628411e-2,
        -1.9894257822027364943e-3,
        -8.860702618046368399e-3,
        2.7269362587384957399e-3,
        3.3227077739731917801e-3,
        -1.8424842902033312808e-3,
        -8.9997742374629504911e-4,
        8.7725819367482748435e-4,
        1.1532124404663004565e-4,
        -3.0988009909846979895e-4,
        3.5437145232760590053e-5,
        7.9046400039655282551e-5,
        -2.7330481199600417464e-5,
        -1.2771952931997838041e-5,
        8.9906613930625889054e-6,
        5.232827708153076418e-7,
        -1.7792013326536345626e-6,
        3.2120375188625190949e-7,
        1.9228067901423716013e-7,
        -8.6569417322785071634e-8,
        -2.6115985561117708643e-9,
        9.2792244800813723723e-9,
        -1.8804157550621555372e-9,
        -2.2284749102281688993e-10,
        1.535901570162657197e-10,
        -2.527625163465644811e-11,
        1.5096920828239108679e-12,
    ],
    &[
        9.4937957507105921178e-5,
        1.650520233532988247e-3,
        1.3097554292558500821e-2,
        6.2274744025149604842e-2,
        1.9503943871677009942e-1,
        4.1329296227835636861e-1,
        5.7366904303422226032e-1,
        4.3915831178916623219e-1,
        1.7740767809866857278e-3,
        -3.2638459369178002164e-1,
        -1.7483996128939250427e-1,
        1.8129183231112269607e-1,
        1.8275540958967237465e-1,
        -1.0432390028592704391e-1,
        -1.4797719327525449358e-1,
        6.9823186113292365138e-2,
        1.0648240524980863032e-1,
        -5.3448561681483191495e-2,
        -6.8654759604035915255e-2,
        4.2232185796372035412e-2,
        3.8535715971111864258e-2,
        -3.1378110363067754842e-2,
        -1.7760903568358183541e-2,
        2.0734920179963824759e-2,
        5.8295805553188879719e-3,
        -1.1785497906193028937e-2,
        -5.2873839926268144392e-4,
        5.6019472394238048532e-3,
        -9.3905825047382896462e-4,
        -2.1455302815676209803e-3,
        8.3834880565436160464e-4,
        6.1613822045743441937e-4,
        -4.3195570742618074667e-4,
        -1.06057474828380389e-4,
        1.5747952386074935905e-4,
        -5.2777954930378689763e-6,
        -4.1096739963914778163e-5,
        1.0742215408721950313e-5,
        7.0000786829649867349e-6,
        -3.8874001618567951876e-6,
        -4.6504632206402626392e-7,
        7.9392106337099520884e-7,
        -1.0790042375786714119e-7,
        -8.9044663701685907691e-8,
        3.4077956212907300087e-8,
        2.169328259850323107e-9,
        -3.7760104785323243282e-9,
        6.7800472458286366683e-10,
        1.0023031910465269135e-10,
        -5.8404081853411714685e-11,
        9.1305100163717962439e-12,
        -5.2518712242444350378e-13,
    ],
    &[
        6.6871313854319317349e-5,
        1.2055312316732132343e-3,
        9.9525887808766197719e-3,
        4.9452599982904880043e-2,
        1.6292202750239332064e-1,
        3.6711021412538982264e-1,
        5.5384986099048004876e-1,
        4.9340612267799899793e-1,
        1.0284085506182291127e-1,
        -2.8971680331459484632e-1,
        -2.4826458190326056678e-1,
        1.1482301951778535763e-1,
        2.2727328841417082653e-1,
        -3.8786418631802310624e-2,
        -1.7803174095900858211e-1,
        1.5799397460240484312e-2,
        1.3119797171715532897e-1,
        -1.406275155580876537e-2,
        -9.1022906529565917982e-2,
        1.7311018265493710891e-2,
        5.7969405734717988147e-2,
        -1.8512493561998077105e-2,
        -3.2739066631020871455e-2,
        1.6146966922395666823e-2,
        1.566559564892457873e-2,
        -1.1577186458976281401e-2,
        -5.862096345462925973e-3,
        6.8566356096848806753e-3,
        1.3426268773036796091e-3,
        -3.3328544695200061628e-3,
        1.4575296259317285871e-4,
        1.3011774502441351391e-3,
        -3.4183512269154276119e-4,
        -3.8790185741013276044e-4,
        2.0197198796903268571e-4,
        7.6600583870685768767e-5,
        -7.7111455177975842084e-5,
        -3.5174836149074453918e-6,
        2.0634426477368853185e-5,
        -3.9011640706384255282e-6,
        -3.657500908187104997e-6,
        1.6343696247256378354e-6,
        3.0508806862519990942e-7,
        -3.4724681473943892694e-7,
        3.286558968055159531e-8,
        4.0262550528669086372e-8,
        -1.3213322739900565588e-8,
        -1.3094656068569551513e-9,
        1.5216149847785217408e-9,
        -2.4155269280111306605e-10,
        -4.3749862242936543951e-11,
        2.2136620880676624852e-11,
        -3.2957901224765858071e-12,
        1.8281883528824249336e-13,
    ],
    &[
        4.7108077750140511011e-5,
        8.7949851598438702736e-4,
        7.5426503776468591772e-3,
        3.9092608115405344261e-2,
        1.3513791425364104508e-1,
        3.2256336128552242573e-1,
        5.2499823163033555623e-1,
        5.3051629344148580753e-1,
        2.0017614404598443804e-1,
        -2.3049895404758252573e-1,
        -3.0132780953264178169e-1,
        3.2857879163387104685e-2,
        2.4580815137375955358e-1,
        3.6906885315711272053e-2,
        -1.8287733073298491669e-1,
        -4.6838233744551676165e-2,
        1.3462756791022608775e-1,
        3.4478631275099705247e-2,
        -9.768535580565244175e-2,
        -1.7341922831305899088e-2,
        6.7747895501909339562e-2,
        3.4480189555409511376e-3,
        -4.3333368616086283939e-2,
        4.4317329100629883205e-3,
        2.4688060010151865863e-2,
        -6.8155497645523096393e-3,
        -1.2063591968218490058e-2,
        5.8388166277489448645e-3,
        4.784863112454241718e-3,
        -3.7254612470742547992e-3,
        -1.3603738456396924366e-3,
        1.8759986682027956262e-3,
        1.4156723931404642576e-4,
        -7.4867495591146299913e-4,
        1.154656063658921252e-4,
        2.2957909822334562024e-4,
        -8.9039014900444880995e-5,
        -4.9077134161902508583e-5,
        3.6414012110508027812e-5,
        4.638664981394294654e-6,
        -1.0043260413334226018e-5,
        1.2479003175748341461e-6,
        1.8403637345177691917e-6,
        -6.6702154799548925887e-7,
        -1.7574611732098427799e-7,
        1.490660013535362171e-7,
        -8.262387315626556966e-9,
        -1.7841386908757100772e-8,
        5.0440470563834364446e-9,
        6.944540328946226953e-10,
        -6.0770412472290102248e-10,
        8.4922200110563821055e-11,
        1.867367263783390419e-11,
        -8.3654904712588007993e-12,
        1.1888505334059015208e-12,
        -6.3677723547148573356e-14,
    ],
    &[
        3.3189662798415247618e-5,
        6.4095168030444345408e-4,
        5.7021265177733754348e-3,
        3.0773580221408376767e-2,
        1.1137011695174053048e-1,
        2.806534559709829377e-1,
        4.8975880476219931436e-1,
        5.5137443275837519512e-1,
        2.8910523833582916346e-1,
        -1.5402873445990005425e-1,
        -3.3004094891758805203e-1,
        -5.5706800072940857815e-2,
        2.361052361530259416e-1,
        1.1241917487318837648e-1,
        -1.6087798859418773608e-1,
        -1.0784594993872142011e-1,
        1.1447229589381825797e-1,
        8.3220747162449757903e-2,
        -8.5125492615635502328e-2,
        -5.5027489525325723209e-2,
        6.3479164584211866336e-2,
        3.0531543272704136466e-2,
        -4.518798127778834516e-2,
        -1.291714255426679463e-2,
        2.947043187174764111e-2,
        2.6483273076781679155e-3,
        -1.7041224573606689692e-2,
        1.7378803327205111644e-3,
        8.4697254935607522878e-3,
        -2.5508071277894726591e-3,
        -3.4737989896811006306e-3,
        1.8771209257236501332e-3,
        1.0870539422260629667e-3,
        -1.0007783270856805411e-3,
        -2.0007113630767798083e-4,
        4.1112834547427670334e-4,
        -2.2920180412144998974e-5,
        -1.2930448400807206092e-4,
        3.6450260685627749677e-5,
        2.9133447501690412185e-5,
        -1.6573283953066162899e-5,
        -3.5936448040251876381e-6,
        4.7506092464525528502e-6,
        -3.0290545920528182865e-7,
        -8.9757017506362807345e-7,
        2.6338983869976965539e-7,
        9.3871974110958630265e-8,
        -6.2861569220107861668e-8,
        1.0765919066191961374e-9,
        7.7689788547700622389e-9,
        -1.8939953861719841478e-9,
        -3.4268008632630890018e-10,
        2.4070994535093429624e-10,
        -2.9405892507645325829e-11,
        -7.8325097336278170324e-12,
        3.1527624133703104238e-12,
        -4.2856548700683441019e-13,
        2.2191913115883029609e-14,
    ],
    &[
        2.3386161727314214715e-5,
        4.6663795042855093367e-4,
        4.30079716504806951e-3,
        2.4130832671588378952e-2,
        9.1238304067015706793e-2,
        2.4202067094021409945e-1,
        4.504878218533178367e-1,
        5.5757223291283643041e-1,
        3.6624268337162797931e-1,
        -6.6183670775937315019e-2,
        -3.3296697502085560692e-1,
        -1.4196851333008293102e-1,
        1.9946212158066430324e-1,
        1.7782987324483673613e-1,
        -1.1455821943270778149e-1,
        -1.5723681795999381269e-1,
        7.2778658970364426999e-2,
        1.2274774604500937787e-1,
        -5.380646545825707676e-2,
        -8.765869003638366048e-2,
        4.3801664671417732503e-2,
        5.6712365744735694926e-2,
        -3.5673397496759609658e-2,
        -3.226375891935220816e-2,
        2.7078619595294182722e-2,
        1.5287960769857395461e-2,
        -1.8399743868117341187e-2,
        -5.2968596661310866292e-3,
        1.0915631658304889275e-2,
        6.1967175649772443836e-4,
        -5.5307301481920032889e-3,
        8.4338458666209339821e-4,
        2.3245200940600993044e-3,
        -8.6092769681104238797e-4,
        -7.678782504380918698e-4,
        5.0509482390334677963e-4,
        1.7248258423517097255e-4,
        -2.1617183011696338043e-4,
        -8.5483054675840709948e-6,
        6.9820083708083278511e-5,
        -1.3397168632939716293e-5,
        -1.6361524787254264887e-5,
        7.2521455358904690157e-6,
        2.3275490984936865096e-6,
        -2.1872676769961664167e-6,
        1.0994743385262033043e-8,
        4.2616623260115724465e-7,
        -1.0004146823545008989e-7,
        -4.7643799651394533577e-8,
        2.6054427549776254319e-8,
        5.553397861397053983e-10,
        -3.3311056804675782459e-9,
        6.9848626918321825842e-10,
        1.6136229782709043606e-10,
        -9.4613879972768021209e-11,
        1.0001051313931711927e-11,
        3.2394286385322861144e-12,
        -1.1852375921015823283e-12,
        1.543997570847620046e-13,
        -7.7379426309544057087e-15,
    ],
    &[
        1.6480133864561407481e-5,
        3.3941220377699566992e-4,
        3.2368840686277212218e-3,
        1.8853691612985912692e-2,
        7.4336093011647886979e-2,
        2.0701287448523532862e-1,
        4.0919220003742785639e-1,
        5.5113984091427549836e-1,
        4.2946880820613729554e-1,
        2.7169212497369464223e-2,
        -3.1095511831950751869e-1,
        -2.1797848552356335217e-1,
        1.4017828876527326817e-1,
        2.2496671147373709337e-1,
        -4.992634916046823977e-2,
        -1.8696236089571544944e-1,
        1.5436988429488934097e-2,
        1.4508950093199319815e-1,
        -8.1398322734692368635e-3,
        -1.0761277332349563267e-1,
        1.0941297452364969257e-2,
        7.5353611743281406955e-2,
        -1.4880026618104822027e-2,
        -4.8619075464854330035e-2,
        1.6154171565985911136e-2,
        2.8047619366756169069e-2,
        -1.4276275277763519433e-2,
        -1.3900552939266528808e-2,
        1.0517639487371840891e-2,
        5.5161635733109925666e-3,
        -6.5208523758746125533e-3,
        -1.4282642232189098914e-3,
        3.3930667767159319284e-3,
        -6.3979011060146004929e-5,
        -1.4590417419851609431e-3,
        3.4313982969047344381e-4,
        4.9988161756372226149e-4,
        -2.3965834694029496153e-4,
        -1.2434116172502286694e-4,
        1.0895843504167668827e-4,
        1.5013357274445329971e-5,
        -3.6312551578600861643e-5,
        4.0345202351842788398e-6,
        8.7953013426929877654e-6,
        -3.0351423658915096301e-6,
        -1.3690602309429407821e-6,
        9.810015422044371574e-7,
        5.327250656974915427e-8,
        -1.9759251291702062482e-7,
        3.6168265173310048052e-8,
        2.3283097138214096443e-8,
        -1.0615296021502523065e-8,
        -6.4743116879598613987e-10,
        1.4085681510251774271e-9,
        -2.5240439541533533062e-10,
        -7.3489300324862639048e-11,
        3.6921088088711294116e-11,
        -3.3270089671259799299e-12,
        -1.3243349172439631639e-12,
        4.4454670962919321633e-13,
        -5.5594420505790143376e-14,
        2.6993828797626656473e-15,
    ],
    &[
        1.1614633021350148856e-5,
        2.4665669063809033527e-4,
        2.4312619195722661008e-3,
        1.4681046381419135635e-2,
        6.0257499120335370817e-2,
        1.7575078363943889882e-1,
        3.675096285973496362e-1,
        5.3431791934095383229e-1,
        4.7780916373394840336e-1,
        1.2063053826561782695e-1,
        -2.6669818147667555355e-1,
        -2.7742158155842721533e-1,
        6.471335480551623831e-2,
        2.4831064235688017361e-1,
        2.4662444839697404417e-2,
        -1.9210234470854689843e-1,
        -4.8995117184671738534e-2,
        1.4523207947528664608e-1,
        4.4404908199939740226e-2,
        -1.094561131160893831e-1,
        -2.9627872508447704912e-2,
        8.0874140638483957441e-2,
        1.4106151516106607729e-2,
        -5.6926314062478435505e-2,
        -2.3802644649325738344e-3,
        3.7051457923544680104e-2,
        -4.1459076608272187815e-3,
        -2.1662822836391193476e-2,
        6.1675273106856751126e-3,
        1.1017400715406881165e-2,
        -5.4115682572757912086e-3,
        -4.6492167511844115287e-3,
        3.6272246406878649601e-3,
        1.4689551004684677725e-3,
        -1.9647405558217782542e-3,
        -2.2116787295790979163e-4,
        8.6730585184505553439e-4,
        -1.0245373106073961869e-4,
        -3.0596544238269117505e-4,
        1.0539154617398281147e-4,
        8.1036783291348383898e-5,
        -5.2598092826843227826e-5,
        -1.294045779405512724e-5,
        1.8242684019806912206e-5,
        -6.3617815322602549534e-7,
        -4.5583095762644231351e-6,
        1.2028890363216209903e-6,
        7.5600476255959478194e-7,
        -4.2859706931514572554e-7,
        -5.0033618687482302937e-8,
        8.965966311957728377e-8,
        -1.2199243594833730931e-8,
        -1.1043830217226489796e-8,
        4.2504223119805929837e-9,
        4.3843877999404743696e-10,
        -5.8810914626346056289e-10,
        8.9047237962216054905e-11,
        3.263270741332907876e-11,
        -1.4309187651692023202e-11,
        1.0756106535010621152e-12,
        5.3614822296118016381e-13,
        -1.6638004894334023699e-13,
        2.0007153038105249544e-14,
        -9.4210191395350784213e-16,
    ],
    &[
        8.1863583141750919399e-6,
        1.7910161537027914794e-4,
        1.8227094351640842081e-3,
        1.1395943374581609258e-2,
        4.8614666531716195084e-2,
        1.4818631318005280818e-1,
        3.2671813011770757839e-1,
        5.0937617251493965522e-1,
        5.1125477058326746554e-1,
        2.0958235071305542165e-1,
        -2.0420262239854210496e-1,
        -3.1599741076656025619e-1,
        -1.9278339436952759156e-2,
        2.4542061211927911142e-1,
        9.9851558680338156981e-2,
        -1.7142809905185932793e-1,
        -1.1084413311671079108e-1,
        1.2196785640373461494e-1,
        9.4788088050615958893e-2,
        -9.1146968351331489131e-2,
        -7.0302485054056159215e-2,
        7.019114394099653255e-2,
        4.5734561893896677431e-2,
        -5.3471251335822289194e-2,
        -2.5248582977476499293e-2,
        3.8687060760244964817e-2,
        1.0703265820019549427e-2,
        -2.5728761754732973361e-2,
        -2.1677586173536073248e-3,
        1.5316954115857665483e-2,
        -1.5942887824146047686e-3,
        -7.9535403870579392405e-3,
        2.3890624081659085759e-3,
        3.4808009534057119994e-3,
        -1.8607182144557959121e-3,
        -1.2043092576046588769e-3,
        1.0743806963512913551e-3,
        2.7273058473369372117e-4,
        -4.9083290075903514745e-4,
        4.3931662517661857551e-6,
        1.7804318982512453518e-4,
        -4.1604385162737093062e-5,
        -4.9295644234173018343e-5,
        2.4233353988168903656e-5,
        9.0708057578284538002e-6,
        -8.8661213667577361692e-6,
        -3.6075161028797716312e-7,
        2.2883712761415273055e-6,
        -4.426923407952870148e-7,
        -3.9857912919859440769e-7,
        1.8224433325710534375e-7,
        3.3779727037308543775e-8,
        -3.9878381985188807228e-8,
        3.6728635768381813405e-9,
        5.1112118573474538395e-9,
        -1.6713926772519324952e-9,
        -2.4964021052461936481e-10,
        2.4268331023056823099e-10,
        -3.0495744539458634304e-11,
        -1.4202368598899367924e-11,
        5.5094147207655245488e-12,
        -3.343481218953278766e-13,
        -2.1524883868333026185e-13,
        6.2147402471743983156e-14,
        -7.196510545363322414e-15,
        3.2893736784163063686e-16,
    ],
    &[
        5.7705106327302856275e-6,
        1.2994762006795300378e-4,
        1.3640613900590499982e-3,
        8.8198894038849788032e-3,
        3.9048841351785941389e-2,
        1.241524821113768082e-1,
        2.8776505923371456293e-1,
        4.7847874627937106215e-1,
        5.3055509965646317731e-1,
        2.9036632950727495105e-1,
        -1.2824684217443716729e-1,
        -3.3152530150838694177e-1,
        -1.0389191551564047183e-1,
        2.1690722018742759506e-1,
        1.6660175041220744373e-1,
        -1.2733735822380115628e-1,
        -1.609249271778668063e-1,
        7.7991846937948107383e-2,
        1.3412596027113612848e-1,
        -5.4482968064139046366e-2,
        -1.0294759699281408523e-1,
        4.3576094649631297264e-2,
        7.3185235436795605555e-2,
        -3.7012838417862449604e-2,
        -4.7438559645277762472e-2,
        3.0739746573959344599e-2,
        2.7228350756354196101e-2,
        -2.367173792282636485e-2,
        -1.3143980016657160861e-2,
        1.6409374199865192521e-2,
        4.7136492609998099059e-3,
        -1.0045506708361519174e-2,
        -6.194748845153872839e-4,
        5.3349507687599360322e-3,
        -7.692127975067836976e-4,
        -2.3994539435370558639e-3,
        8.5899598743636619554e-4,
        8.7519990640786887326e-4,
        -5.5273557621441979755e-4,
        -2.3267321402335316354e-4,
        2.6507723975580578198e-4,
        2.660050018453441903e-5,
        -9.9146977707801346036e-5,
        1.3531172272496495813e-5,
        2.8449514196978073765e-5,
        -1.0576574942579506238e-5,
        -5.7108265109983039383e-6,
        4.1698717585470283983e-6,
        4.9797181014213077481e-7,
        -1.1163065348170084286e-6,
        1.4481957083331851271e-7,
        2.0259906666678592167e-7,
        -7.5267017404125894112e-8,
        -1.9903465015317369159e-8,
        1.7404233329360680765e-8,
        -8.6657442613687222159e-10,
        -2.3165019469954827516e-9,
        6.4463782103234023131e-10,
        1.3004103186094152489e-10,
        -9.9047745376324090155e-11,
        1.0042087354617698648e-11,
        6.0801253540001672541e-12,
        -2.1078791089153015463e-12,
        9.7994511582115977279e-14,
        8.5791940517997331798e-14,
        -2.3170837039064084811e-14,
        2.5873383819356995558e-15,
        -1.1489447544805901282e-16,
    ],
    &[
        4.0679340611485590267e-6,
        9.4214694755767406316e-5,
        1.0191226803750981093e-3,
        6.807292884319132012e-3,
        3.1236288511490714531e-2,
        1.0340445586147837899e-1,
        2.5130737899449331285e-1,
        4.4359273922403543782e-1,
        5.3700842750916610287e-1,
        3.6034564051804732787e-1,
        -4.3883881873934041113e-2,
        -3.2382286491211612121e-1,
        -1.8178697676672783258e-1,
        1.6604135749078091954e-1,
        2.1729928932108929777e-1,
        -6.5262871310677538922e-2,
        -1.9191958929859395288e-1,
        1.9309544666018350919e-2,
        1.5529248039623711442e-1,
        -4.7526808341113504453e-3,
        -1.2058552264339355451e-1,
        4.7342291726419487633e-3,
        8.9913547570729544179e-2,
        -9.3185589499039248379e-3,
        -6.3356037440443466121e-2,
        1.3228549585036555245e-2,
        4.1254693064705092127e-2,
        -1.4366839784220071821e-2,
        -2.4169497801660267403e-2,
        1.2766456715656744194e-2,
        1.2289436008118710862e-2,
        -9.5777978992357099981e-3,
        -5.0859916492334298818e-3,
        6.1377545867405210896e-3,
        1.4280887940707621074e-3,
        -3.3576443809223832296e-3,
        7.6159694351727365468e-6,
        1.5496374697023629756e-3,
        -3.3466921642508549616e-4,
        -5.8648103189918175322e-4,
        2.6483288199612890393e-4,
        1.7000122836612490436e-4,
        -1.3658830722611616026e-4,
        -2.9769959628485097439e-5,
        5.3041431229133102225e-5,
        -2.437001526827789861e-6,
        -1.5724420772702816937e-5,
        4.3080478617167311914e-6,
        3.3533458628713098894e-6,
        -1.8959296176931532885e-6,
        -3.9039317332873061667e-7,
        5.3023686169047609171e-7,
        -3.700308378205124538e-8,
        -9.9903969445349007558e-8,
        3.0081886507190669282e-8,
        1.0849027337899348253e-8,
        -7.4581165528930376312e-9,
        5.8979513103843615755e-11,
        1.0308233454854333838e-9,
        -2.4335455737516729362e-10,
        -6.4079382565018890184e-11,
        4.0005366272537445107e-11,
        -3.1256393571085575406e-12,
        -2.5670654761550814492e-12,
        8.0150885336879009219e-13,
        -2.5979543288938480843e-14,
        -3.397720856796267432e-14,
        8.6240374347200892027e-15,
        -9.2980125293241854209e-16,
        4.0146287123334886543e-17,
    ],
    &[
        2.8679251827559463346e-6,
        6.8260286785463586917e-5,
        7.6021510996684882859e-4,
        5.2402973774098843662e-3,
        2.4890565644827964849e-2,
        8.5652092595264090839e-2,
        2.1775695309790081496e-1,
        4.0643369770825534674e-1,
        5.3226689526072869148e-1,
        4.1787533560096978636e-1,
        4.3975197529348629939e-2,
        -2.9442103958911457111e-1,
        -2.4680703697812552705e-1,
        9.8114204163114770505e-2,
        2.4653727760897421105e-1,
        7.2785150957922290097e-3,
        -1.9933720560864961986e-1,
        -4.5861400746392716391e-2,
        1.5410623662764288418e-1,
        5.027618007353842862e-2,
        -1.1880375431013563168e-1,
        -3.9880853575513175841e-2,
        9.1156782258016544063e-2,
        2.5038721449568489899e-2,
        -6.8209016636817511249e-2,
        -1.1319100316817427944e-2,
        4.8513083547809085386e-2,
        1.4249726617653916031e-3,
        -3.1980720677639696545e-2,
        3.9840401987170048574e-3,
        1.9063594780625359329e-2,
        -5.6578132450588183804e-3,
        -9.990263473281372348e-3,
        5.0229891066658290047e-3,
        4.4134848353505752519e-3,
        -3.4845414454048833112e-3,
        -1.5030740662966437495e-3,
        1.9907937718517372704e-3,
        2.7768127957120260682e-4,
        -9.4634038232611019646e-4,
        8.6145657589927020326e-5,
        3.6935072849675105026e-4,
        -1.1551188958435270968e-4,
        -1.1318994680846656717e-4,
        6.6947411969305902571e-5,
        2.3751066836608607772e-5,
        -2.7313908246543379129e-5,
        -1.1834710599856159428e-6,
        8.3722181981607884326e-6,
        -1.5861457824345774955e-6,
        -1.8708116028591807138e-6,
        8.3114212797077785282e-7,
        2.5484235225565778312e-7,
        -2.4553776584342326991e-7,
        2.7532490733395122541e-9,
        4.7990434654509920099e-8,
        -1.1560936888170084068e-8,
        -5.6127843433277913975e-9,
        3.1388416957824240184e-9,
        1.090815553713751811e-10,
        -4.5125457785632496344e-10,
        8.9624182038596119871e-11,
        3.0374290981125352218e-11,
        -1.5997166892613571432e-11,
        8.8768462872173742135e-13,
        1.0709693571140170024e-12,
        -3.0292850269748772689e-13,
        5.5422631826398042352e-15,
        1.338071386299105896e-14,
        -3.2046285434017498604e-15,
        3.3399719848186932131e-16,
        -1.4032741753731906175e-17,
    ],
    &[
        2.0220608624983921218e-6,
        4.9423437506281320047e-5,
        5.6624183770667240138e-4,
        4.0241403682572867707e-3,
        1.9762286153879591532e-2,
        7.058482597718160832e-2,
        1.873263318620649448e-1,
        3.6844097240030614094e-1,
        5.1816704085562288731e-1,
        4.6220755366160571455e-1,
        1.3087896323302017261e-1,
        -2.4618042976108341329e-1,
        -2.9437591526266177228e-1,
        1.9671500452359389771e-2,
        2.5152325436026869334e-1,
        8.180602838721862339e-2,
        -1.8196229177860800074e-1,
        -1.0845171382330178456e-1,
        1.2992964695985375278e-1,
        1.0178029683881417975e-1,
        -9.6607540616684390309e-2,
        -8.2330211906557408674e-2,
        7.5047619948360179336e-2,
        5.9567410871529952454e-2,
        -5.9256815632658970952e-2,
        -3.825382947938424882e-2,
        4.5807944151268332466e-2,
        2.0972800592597548833e-2,
        -3.3523584064100969944e-2,
        -8.8334938904102323941e-3,
        2.2618651544599473566e-2,
        1.6904723834844237437e-3,
        -1.3763981962894784339e-2,
        1.5193057788333992185e-3,
        7.3877574528555836401e-3,
        -2.2480531870038247061e-3,
        -3.394523276408398602e-3,
        1.8168713438014235255e-3,
        1.2639342581174771826e-3,
        -1.1114848653186301973e-3,
        -3.2807884708801984194e-4,
        5.4905327733736312302e-4,
        1.5344390231955032111e-5,
        -2.2089440324554938525e-4,
        4.3367261259456952149e-5,
        7.0551387820654650758e-5,
        -3.0986629276199300524e-5,
        -1.6391624961605830992e-5,
        1.3543277184167818107e-5,
        1.8499450031155903908e-6,
        -4.309941556597092389e-6,
        4.8547313969964116818e-7,
        1.0021213992971776298e-6,
        -3.4949486034457276459e-7,
        -1.5098853886715835535e-7,
        1.10903123221643939e-7,
        5.3506575154614342906e-9,
        -2.2521938367248057754e-8,
        4.2244857063624192681e-9,
        2.7939744659539826598e-9,
        -1.2972050014694351399e-9,
        -1.0314111290969749657e-10,
        1.9461648940823150213e-10,
        -3.203398244123241368e-11,
        -1.398415715537641488e-11,
        6.3349554409739132496e-12,
        -2.0963631942348005416e-13,
        -4.4216124098721053673e-13,
        1.1380528309214396825e-13,
        -4.5188896074637263945e-16,
        -5.2430256918842058323e-15,
        1.1890123875082528799e-15,
        -1.199280335852879555e-16,
        4.9066150649352036949e-18,
    ],
    &[
        1.4257766416741316721e-6,
        3.5762519942640230127e-5,
        4.2117026647271164322e-4,
        3.0830881192537517743e-3,
        1.5637249347572156173e-2,
        5.7889943612859256497e-2,
        1.6007199356411069735e-1,
        3.3077578141101465115e-1,
        4.9659117531171809766e-1,
        4.9335607851710079757e-1,
        2.1305057135557851383e-1,
        -1.828676677083358908e-1,
        -3.2167563780899786285e-1,
        -6.2266506047824322266e-2,
        2.321259638353531085e-1,
        1.4998511961871701996e-1,
        -1.4179568597305962167e-1,
        -1.5991256515824436183e-1,
        8.5638121556151057416e-2,
        1.4141473407338268009e-1,
        -5.6586458630727381457e-2,
        -1.1473117071074437524e-1,
        4.3095895433047642881e-2,
        8.7204398262039750119e-2,
        -3.6605103402874295674e-2,
        -6.1766208708413159936e-2,
        3.1989877531537806308e-2,
        4.005498110511594821e-2,
        -2.6891493880894514386e-2,
        -2.3114134020549316809e-2,
        2.0904645255655243402e-2,
        1.1290497278685964843e-2,
        -1.4701882065398682137e-2,
        -4.1313066560310892741e-3,
        9.214785032197180512e-3,
        5.6257157484035320057e-4,
        -5.0713145092183480939e-3,
        7.1698218210640192578e-4,
        2.4006977818909731839e-3,
        -8.4486266655377750091e-4,
        -9.424614077227377964e-4,
        5.810759750532863662e-4,
        2.817639250380670746e-4,
        -3.0310204607266119936e-4,
        -4.5556826966684202747e-5,
        1.2620433501661707054e-4,
        -1.1554091038337171926e-5,
        -4.1751416485403977973e-5,
        1.3341761499213503825e-5,
        1.0373591840455997956e-5,
        -6.4567304284696191604e-6,
        -1.5508443501186025759e-6,
        2.1499602699396652078e-6,
        -8.4870875860725930719e-8,
        -5.187733738874144426e-7,
        1.3963775455083554812e-7,
        8.4003510468959655269e-8,
        -4.8847579374592867621e-8,
        -5.4242748002872985111e-9,
        1.0347045392748584809e-8,
        -1.4363294877951357069e-9,
        -1.3491977539834488219e-9,
        5.2611325573575984945e-10,
        6.7323364901893086857e-11,
        -8.2782565225381347273e-11,
        1.1016929345994545512e-11,
        6.2915373170395085816e-12,
        -2.484789237563642857e-12,
        2.6264965040652520705e-14,
        1.8086612362745305823e-13,
        -4.249817819571463007e-14,
        -4.5633971621273731091e-16,
        2.0450996767889889078e-15,
        -4.4053070424834613424e-16,
        4.3045968395587900163e-17,
        -1.7161524510887441887e-18,
    ],
    &[
        1.0053982545871994882e-6,
        2.5862315334396727224e-5,
        3.1284977783158717e-4,
        2.3569446153715987754e-3,
        1.2333597271308318394e-2,
        4.7265384340158513409e-2,
        1.3593319719908938087e-1,
        2.9433540588349492134e-1,
        4.693608615740439942e-1,
        5.1194128029030625815e-1,
        2.8750694700666339754e-1,
        -1.0873964994476206524e-1,
        -3.2763331044463398833e-1,
        -1.4091096782386932031e-1,
        1.9061811531836886487e-1,
        2.0458354208152493754e-1,
        -8.3567610894713344859e-2,
        -1.9338592911224832116e-1,
        2.7032735675975696893e-2,
        1.6267294821979413034e-1,
        -4.4151823449293701729e-3,
        -1.3074648302845432196e-1,
        -4.0055566050676112638e-5,
        1.0180184509399963993e-1,
        -3.353953768726009913e-3,
        -7.6185550696469823136e-2,
        8.4593307320036264978e-3,
        5.3898337700045450025e-2,
        -1.203939712997357949e-2,
        -3.5319143270047476181e-2,
        1.2959917454305506834e-2,
        2.0925091393126516465e-2,
        -1.1520057072863414498e-2,
        -1.0841518094790432637e-2,
        8.7468075112976062636e-3,
        4.6246575888368979245e-3,
        -5.7432226180114113467e-3,
        -1.371066361053657644e-3,
        3.2628478038717783563e-3,
        2.4755913596207105959e-5,
        -1.5888030751769171549e-3,
        3.2321201996041277775e-4,
        6.4780774464687800275e-4,
        -2.8052222324444042269e-4,
        -2.0953989562388843185e-4,
        1.5896862988828534526e-4,
        4.5563290872238143322e-5,
        -6.9100360462703106406e-5,
        -6.2603480377854469136e-7,
        2.3651301595001388409e-5,
        -5.1720762698337357206e-6,
        -6.1767863473844259624e-6,
        2.9486716940789021308e-6,
        1.0715141455278684978e-6,
        -1.0403556341954696202e-6,
        -3.4847957838975585661e-8,
        2.6064225547112449868e-7,
        -5.2057186447986238839e-8,
        -4.4641657225559965895e-8,
        2.0957787171891827433e-8,
        3.7773817060538422186e-9,
        -4.6601044388631635871e-9,
        4.3289503697590714772e-10,
        6.3539049748816788108e-10,
        -2.0915249690216728581e-10,
        -3.8112390404683196794e-11,
        3.4758411428789484695e-11,
        -3.5903578406279389564e-12,
        -2.7774985564465020347e-12,
        9.653754702557348486e-13,
        1.2024032105774861375e-14,
        -7.336937788258525116e-14,
        1.5773611330285130713e-14,
        4.1050897870849665399e-16,
        -7.944420634954080188e-16,
        1.6299831703293736309e-16,
        -1.5444938700235549271e-17,
        6.0042243745943905984e-19,
    ],
    &[
        7.0901058659278723494e-7,
        1.8692336180810839446e-5,
        2.3209513141067580054e-4,
        1.7981007546980892456e-3,
        9.6984778191784686431e-3,
        3.8428136771422604938e-2,
        1.147655147691482236e-1,
        2.5977786292593697734e-1,
        4.3816087469162420376e-1,
        5.1903208167031517158e-1,
        3.5209587430051816399e-1,
        -2.8170555146057110765e-2,
        -3.127580923586854651e-1,
        -2.1027586267320005357e-1,
        1.3119800495958509912e-1,
        2.4017738760081101983e-1,
        -1.3950749432057319693e-2,
        -2.0452536951222130008e-1,
        -3.8147287462726452876e-2,
        1.6185596569804879014e-1,
        5.2166029600482611861e-2,
        -1.2673231429347719746e-1,
        -4.7410984537435616524e-2,
        9.9420123535421257163e-2,
        3.4928362140642477434e-2,
        -7.7296175881412569482e-2,
        -2.0943753388564527967e-2,
        5.8341015707548308164e-2,
        8.950082914013583667e-3,
        -4.1794876905630197342e-2,
        -5.9477594777777220504e-4,
        2.7810379360334393207e-2,
        -3.8880721020162246896e-3,
        -1.6821735735421062487e-2,
        5.2450565216581004644e-3,
        9.0185696622430881647e-3,
        -4.673573176879535594e-3,
        -4.1244903960878893723e-3,
        3.3213080699422316409e-3,
        1.4839299562157729313e-3,
        -1.9747597319539720137e-3,
        -3.1187373443757407457e-4,
        9.9291688804407332357e-4,
        -7.0848746549404655066e-5,
        -4.1816247184188433377e-4,
        1.2111298980957376631e-4,
        1.4252761156270762037e-4,
        -7.8784824127881617815e-5,
        -3.5664718979466449802e-5,
        3.6295117553374470123e-5,
        4.0660179666249183037e-6,
        -1.2888320241357536657e-5,
        1.6550257250159118029e-6,
        3.5078332868396774756e-6,
        -1.2804314477881047015e-6,
        -6.6863488870302583002e-7,
        4.8834652506691548644e-7,
        5.3612316791672759288e-8,
        -1.2745089299843439634e-7,
        1.7410694403047795195e-8,
        2.2884041448442447932e-8,
        -8.7397284731041807665e-9,
        -2.2733339236653048672e-9,
        2.0593886969298042451e-9,
        -9.9627150703086068374e-11,
        -2.9288371153505963822e-10,
        8.133927686251150144e-11,
        1.9952985788930958178e-11,
        -1.441467866087487499e-11,
        1.0752965662607837264e-12,
        1.2066824632990920086e-12,
        -3.7146779207817696029e-13,
        -1.3522696000451318808e-14,
        2.9538296603649140902e-14,
        -5.818104870795009482e-15,
        -2.4502202834775990883e-16,
        3.0745679262737877346e-16,
        -6.0233779324166933655e-17,
        5.5397391390658758042e-18,
        -2.1012535076232193146e-19,
    ],
    &[
        5.0002759774485385809e-7,
        1.3502944648411551112e-5,
        1.7197909140297072417e-4,
        1.3690726916594229515e-3,
        7.6045500907647604838e-3,
        3.1119219654897047586e-2,
        9.6368770874049769324e-2,
        2.275524554530025308e-1,
        4.0449021418706228409e-1,
        5.1599706813534061754e-1,
        4.0546814611740718655e-1,
        5.4656364640641835488e-2,
        -2.7887487105407594229e-1,
        -2.6558287996284220807e-1,
        5.938215041295843945e-2,
        2.5356180264311142709e-1,
        5.937948457037657535e-2,
        -1.9189573027204842774e-1,
        -1.0141423998562360166e-1,
        1.3852974948248704461e-1,
        1.0466648678871951371e-1,
        -1.0235210258874999982e-1,
        -9.1057476707661388458e-2,
        7.9158612693497132409e-2,
        7.1274194860022858384e-2,
        -6.3357431953391690801e-2,
        -5.0647776954224959126e-2,
        5.0919315182701699709e-2,
        3.2149581699677040187e-2,
        -3.9754359312925728167e-2,
        -1.7465568800812482474e-2,
        2.9325481855928813745e-2,
        7.2508894107828865592e-3,
        -1.9998470414897856262e-2,
        -1.2421569250939989768e-3,
        1.2375071434713135696e-2,
        -1.4861353272282453168e-3,
        -6.8139730068844939547e-3,
        2.1268013961144785743e-3,
        3.2502637388137738645e-3,
        -1.7589593221657570464e-3,
        -1.2791929868689088828e-3,
        1.1228387241284744188e-3,
        3.6559249351382128355e-4,
        -5.884779163737723255e-4,
        -3.3186597208245963887e-5,
        2.5603805231831677955e-4,
        -4.2863914479396245626e-5,
        -9.0860537021982971469e-5,
        3.6462869659219825811e-5,
        2.4724775580324530366e-5,
        -1.8269294112506377012e-5,
        -4.1040349140470633706e-6,
        6.775412733017085582e-6,
        -2.9207145425875238766e-7,
        -1.9153401202504484891e-6,
        5.2123236239464368415e-7,
        3.9043134715900305766e-7,
        -2.221077154482925474e-7,
        -4.3006010302588679194e-8,
        6.0765746208709640176e-8,
        -4.6794865016765587394e-9,
        -1.1385401577079566496e-8,
        3.52888199431862359e-9,
        1.2611500218476202831e-9,
        -8.9341451085394607241e-10,
        3.5402670495544696556e-12,
        1.3248353974797942303e-10,
        -3.084804800482839886e-11,
        -9.9287634430373710373e-12,
        5.9067826524688229226e-12,
        -2.7420039483790029925e-13,
        -5.170173505101894153e-13,
        1.4153289627744138718e-13,
        8.7411118126709156757e-15,
        -1.180979589864572148e-14,
        2.1321764863395925406e-15,
        1.263679799267589542e-16,
        -1.1858160542220843469e-16,
        2.223193914602862111e-17,
        -1.9863182009847382248e-18,
        7.355535731327443375e-20,
    ],
    &[
        3.5266363642863420613e-7,
        9.7492925803067432117e-6,
        1.2728877579999880602e-4,
        1.040470843574591837e-3,
        5.9465567208786603275e-3,
        2.5106092917214891533e-2,
        8.0509565246265231871e-2,
        1.9793265041527378197e-1,
        3.6963579653506093568e-1,
        5.0437268114308666951e-1,
        4.4700276383622972675e-1,
        1.3598172269323845727e-1,
        -2.2880026041301702869e-1,
        -3.034925943696097777e-1,
        -1.8643218932615232521e-2,
        2.4386660049120770357e-1,
        1.286959277890045153e-1,
        -1.5695279704515224089e-1,
        -1.5472366525492979479e-1,
        9.5451082524369570981e-2,
        1.4520542157475395735e-1,
        -6.0584344333509793129e-2,
        -1.234412979666844751e-1,
        4.3373771871608579163e-2,
        9.8681586576231676126e-2,
        -3.5596183411662525205e-2,
        -7.4489078396345994502e-2,
        3.1599451378319680034e-2,
        5.2569767544851664011e-2,
        -2.8121027474309311078e-2,
        -3.406227073604585059e-2,
        2.38007674728285935e-2,
        1.9706306150869682013e-2,
        -1.8610781711524287198e-2,
        -9.6883255798056937064e-3,
        1.3225574648633868918e-2,
        3.5762074992067556612e-3,
        -8.4393294748987642813e-3,
        -4.7286461777667949333e-4,
        4.7742891054831813771e-3,
        -6.8311176877626071185e-4,
        -2.3514993932226243269e-3,
        8.2533174198810497478e-4,
        9.7662597276010835005e-4,
        -5.9550534770087156354e-4,
        -3.1831443829880803024e-4,
        3.3102154460299419521e-4,
        6.3074572556236137574e-5,
        -1.4951968725641454283e-4,
        8.2518358507091598746e-6,
        5.4990078159124428532e-5,
        -1.5365625194780659633e-5,
        -1.5857458434694002215e-5,
        8.7806147205489352519e-6,
        3.136083895102734633e-6,
        -3.4406499184515499426e-6,
        -1.4412040997216647681e-7,
        1.0105506595709422223e-6,
        -1.9311635480382209327e-7,
        -2.1711934204894755924e-7,
        9.7616365092849692225e-8,
        2.8407159280155894976e-8,
        -2.8277503485473924294e-8,
        5.2638525683952496625e-10,
        5.5203019414460876166e-9,
        -1.3706728466837231774e-9,
        -6.6292676217037025526e-10,
        3.8051319562175235852e-10,
        1.5856658818581585944e-11,
        -5.8919602166611750889e-11,
        1.1352142591146074288e-11,
        4.7637605063088119401e-12,
        -2.3921940266905407525e-12,
        4.3593394823156912947e-14,
        2.1882405343225047339e-13,
        -5.3373101692863775335e-14,
        -4.7565544084601172221e-15,
        4.6915125495217361855e-15,
        -7.76097259134854211e-16,
        -6.0384734991468107457e-17,
        4.5591246708227910289e-17,
        -8.1963888528024399343e-18,
        7.1198558464314309438e-19,
        -2.5754835368487614007e-20,
    ],
    &[
        2.4874348273926151614e-7,
        7.0357055535380240837e-6,
        9.410939734675055451e-5,
        7.8934003652294950928e-4,
        4.6381041886664866792e-3,
        2.0183207831342894975e-2,
        6.6938833041489440386e-2,
        1.7104870002088875727e-1,
        3.3466416305556775844e-1,
        4.8575287094806657882e-1,
        4.7670214631027339133e-1,
        2.1262646377359013098e-1,
        -1.6600109671466153215e-1,
        -3.2217419705985077281e-1,
        -9.6637754788978867008e-2,
        2.124123624854565651e-1,
        1.8706426757399213479e-1,
        -1.0366240029559033742e-1,
        -1.9149790246228702765e-1,
        3.8030204901232323378e-2,
        1.6768991457709533244e-1,
        -7.1705446884031043872e-3,
        -1.3875087085580252106e-1,
        -2.7288300808881128114e-3,
        1.114801638099686451e-1,
        1.9284264776753965808e-3,
        -8.701809958258770934e-2,
        2.9680223336194676971e-3,
        6.5259033180076804126e-2,
        -7.9980244842621512082e-3,
        -4.6272474955988842532e-2,
        1.1135351068937405085e-2,
        3.0448147996889062091e-2,
        -1.1815744070995162381e-2,
        -1.8183397528369426094e-2,
        1.0470342742128071969e-2,
        9.5502643405874410144e-3,
        -8.0102757130266942825e-3,
        -4.1625936252470049789e-3,
        5.3555524694342939253e-3,
        1.2785014174842249524e-3,
        -3.1324486556898113771e-3,
        -3.7341366480688893432e-5,
        1.5901233250020460775e-3,
        -3.1228382125315112585e-4,
        -6.8672295154631479421e-4,
        2.8952084791068455121e-4,
        2.4120420864060753354e-4,
        -1.7622762356903122634e-4,
        -6.0666644252033169903e-5,
        8.3487332042977401788e-5,
        4.6162210301423666177e-6,
        -3.1829063998166008496e-5,
        5.5394709551629314619e-6,
        9.6042900138822181605e-6,
        -3.9990145931166104795e-6,
        -2.107797362054815833e-6,
        1.6875920388192284274e-6,
        2.215312069897399148e-7,
        -5.1682608770674470232e-7,
        6.0441371683678847158e-8,
        1.1614301776267373338e-7,
        -4.1252187252515695229e-8,
        -1.6978052853343635916e-8,
        1.2848087730391133399e-8,
        5.2378834971893407883e-10,
        -2.6157404307810510285e-9,
        5.0630828014744189279e-10,
        3.3497685162662631605e-10,
        -1.5904790352354233257e-10,
        -1.4317854796272414191e-11,
        2.5798403363733814162e-11,
        -4.0205108892991486255e-12,
        -2.2225400815040717381e-12,
        9.5755171521847179204e-13,
        1.0105476697329199551e-14,
        -9.1602769376455992342e-14,
        1.9908591154563492648e-14,
        2.3738178515343387988e-15,
        -1.8526233129064934722e-15,
        2.8045956408455617321e-16,
        2.7521548269533377865e-17,
        -1.7477582434474284368e-17,
        3.0185703074957599625e-18,
        -2.5513057555216530133e-19,
        9.0200005434003568601e-21,
    ],
    &[
        1.7545510471550344531e-7,
        5.0750657115668090968e-6,
        6.9506630275615277726e-5,
        5.9781410561845079044e-4,
        3.6087309181818530163e-3,
        1.6171269075570349169e-2,
        5.5405048771632180839e-2,
        1.4691824890071602798e-1,
        3.0042669884824979401e-1,
        4.6170175939414724175e-1,
        4.9507209494240776823e-1,
        2.8207746677005700793e-1,
        -9.4267575519166822804e-2,
        -3.2123930305796916674e-1,
        -1.6883467334992116038e-1,
        1.6236572552904389732e-1,
        2.2899817665434144156e-1,
        -3.7857030858145943694e-2,
        -2.0736145958764034627e-1,
        -2.6539355807637584744e-2,
        1.6864131738507743527e-1,
        5.035709505606792592e-2,
        -1.3385460063346608669e-1,
        -5.2016916381540282125e-2,
        1.0642196654830677409e-1,
        4.3044543735577498407e-2,
        -8.4677459752608249126e-2,
        -3.0169440802782037489e-2,
        6.6455789772412445337e-2,
        1.7377093898283152132e-2,
        -5.0447833454413630124e-2,
        -6.9483973204293031177e-3,
        3.6315783126133977188e-2,
        -1.1344723925487925381e-4,
        -2.4328318749563438961e-2,
        3.8246663429586555797e-3,
        1.4878944897998074188e-2,
        -4.9009158346412619879e-3,
        -8.1174278229750565542e-3,
        4.3594769380349029227e-3,
        3.8116485730927665156e-3,
        -3.1507098742721362609e-3,
        -1.4284044099718619664e-3,
        1.9310274415356317003e-3,
        3.2696961804076310628e-4,
        -1.0141400286453096295e-3,
        5.8709294095913221376e-5,
        4.5305386493025019144e-4,
        -1.2382021090673160347e-4,
        -1.6743420565921356043e-4,
        8.8106070542283121335e-5,
        4.747621374620725313e-5,
        -4.457679942175927244e-5,
        -7.6646920486588556038e-6,
        1.7694148652042281312e-5,
        -1.3623382756996858386e-6,
        -5.5553418460367169323e-6,
        1.700097000887683565e-6,
        1.3092482327400761998e-6,
        -7.9817089866975008867e-7,
        -1.8425536319961956892e-7,
        2.5669276650245087104e-7,
        -1.1805216340502173824e-8,
        -6.0133319538915707351e-8,
        1.6614044189532124839e-8,
        9.5191820501649781417e-9,
        -5.6976547580564052169e-9,
        -5.8991652125534503073e-10,
        1.2136331875924793619e-9,
        -1.7400763359471068174e-10,
        -1.6410021408167191262e-10,
        6.5184113543028924371e-11,
        9.3186492716405490116e-12,
        -1.1132791534262429285e-11,
        1.350641907913211358e-12,
        1.0138095675788029847e-12,
        -3.7878083693396336673e-13,
        -1.5348263587772517382e-14,
        3.7964304382961552688e-14,
        -7.3386381318268867241e-15,
        -1.1236719715227538179e-15,
        7.2748672712769592029e-16,
        -1.0056149225924414146e-16,
        -1.2143464111423246144e-17,
        6.6820471411182591189e-18,
        -1.1105475713770068452e-18,
        9.1396257188084820741e-20,
        -3.1597501957447130947e-21,
    ],
    &[
        1.237663509360907942e-7,
        3.6591822333434305027e-6,
        5.1284989877374205187e-5,
        4.5203324968405819722e-4,
        2.8012996796839581873e-3,
        1.2915658283556157431e-2,
        4.5663738263392350405e-2,
        1.2547384643972575262e-1,
        2.6757430429386357054e-1,
        4.3368877944516138816e-1,
        5.0299844544984104975e-1,
        3.4251229620858840742e-1,
        -1.7424146911884334992e-2,
        -3.0157262399756195226e-1,
        -2.303462267017022984e-1,
        9.8263482946069252948e-2,
        2.508798786645724514e-1,
        3.3554368775977747865e-2,
        -2.0052697100290362326e-1,
        -9.032200243731108737e-2,
        1.4757873418624106292e-1,
        1.0387320572035302536e-1,
        -1.0876195545122576615e-1,
        -9.666804703759191721e-2,
        8.3296617234008965838e-2,
        8.0606102729780260043e-2,
        -6.6598085050470261791e-2,
        -6.1691624651949669058e-2,
        5.4518108196332925825e-2,
        4.3200078158523399708e-2,
        -4.4354323236116520931e-2,
        -2.7111259855034153179e-2,
        3.4852112922195050415e-2,
        1.4558618420427261981e-2,
        -2.5847171741695757354e-2,
        -5.908552986515279436e-3,
        1.7765343224322096201e-2,
        8.344651024253237548e-4,
        -1.1135632551175138323e-2,
        1.4769644499611912938e-3,
        6.2548294955812509971e-3,
        -2.0220463398820107592e-3,
        -3.0720049767611579323e-3,
        1.6944314173800315345e-3,
        1.2617888794972577814e-3,
        -1.1163496304581991625e-3,
        -3.8699879919121150227e-4,
        6.1245607796494045812e-4,
        4.7512135811353828029e-5,
        -2.8319349932012027236e-4,
        4.1177374033122171962e-5,
        1.0895701722950969184e-4,
        -4.0675623989617480801e-5,
        -3.3281089784356911528e-5,
        2.2701714552731044073e-5,
        6.9168401003571230281e-6,
        -9.4670466589345846257e-6,
        -1.6869681087576603792e-7,
        3.0893222394439627026e-6,
        -6.5341044268031884089e-7,
        -7.6876092105834741345e-7,
        3.6265426851960267695e-7,
        1.2662954889413017908e-7,
        -1.2391570081061281736e-7,
        -3.0929519660213725948e-9,
        3.0255762469553111067e-8,
        -6.271656815684515972e-9,
        -5.0967484542734968036e-9,
        2.4632300719267000701e-9,
        4.2536795542760132939e-10,
        -5.5209234060840260663e-10,
        5.2974951852569992563e-11,
        7.8363705104326374204e-11,
        -2.6153657535705833316e-11,
        -5.3100802917156740825e-12,
        4.7381531129035521306e-12,
        -4.1819148326808881021e-13,
        -4.5381727561931631096e-13,
        1.4802030963698538445e-13,
        1.0715886310650072107e-14,
        -1.5589701077940249594e-14,
        2.6698614455643299764e-15,
        5.1303465470477587504e-16,
        -2.8415905545607427089e-16,
        3.5749055605249122229e-17,
        5.2324829209751640169e-18,
        -2.5482858833145900747e-18,
        4.0818026312330220907e-19,
        -3.2732125835229196703e-20,
        1.1071150641507401731e-21,
    ],
];
