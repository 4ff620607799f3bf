"""Regenerates family_fixtures.hpp from a plain-Python model of the family and its arm patterns."""
import re
from pathlib import Path

def res(x,n):
    r = x % (n-2)
    return n-2 if r==0 else r
def family(n):
    K=(2*n-1)*(n-3)
    phi={}
    phi['v0']='v0'
    for i in range(1,n-2): phi[f'v{i}']=f'v{n+2}'
    phi[f'v{n-2}']=f'v{n+1}'; phi[f'v{n-1}']=f'v{n}'; phi[f'v{n}']=f'v{n}'
    phi[f'v{n+1}']=f'v{n+2}'; phi[f'v{n+2}']=f'v{n+2}'
    for i in range(1,n-2):
        phi[f'u{i}']=f'v{n-1}'
        for j in range(1,2*(n-1)):
            if j%2==1: phi[f'u{j*(n-3)+i}']='v0'
        for j in range(2,2*(n-1)-1,2):
            phi[f'u{j*(n-3)+i}']=f'v{res(i-1+j//2,n)}'
        phi[f'u{2*(n-1)*(n-3)+i}']=f'v{n}'
    phi[f'u{K+1}']=f'v{n-1}'
    for i in range(2,2*(n-1)+1,2): phi[f'u{K+i}']='v0'
    phi[f'u{K+3}']=f'v{n-2}'
    for i in range(5,2*(n-1),2): phi[f'u{K+i}']=f'v{(i-3)//2}'
    phi[f'u{K+2*(n-1)+1}']=f'v{n-1}'
    phi[f'u{K+2*(n-1)+2}']=f'v{n-1}'
    phi[f'u{K+2*(n-1)+3}']='v0'
    # arcs of X1 over X0
    arcs={}
    for i in range(1,n-2):
        arcs[('v0',f'v{i}')]=['v0']+[f'u{j*(n-3)+i}' for j in range(0,2*(n-1)+1)]+[f'v{i}']
    arcs[('v0',f'v{n-2}')]=['v0',f'u{K+2*(n-1)+1}',f'v{n-2}']
    arcs[('v0',f'v{n-1}')]=['v0',f'u{K+2*(n-1)+2}',f'u{K+2*(n-1)+3}',f'v{n-1}']
    arcs[(f'v{n-1}',f'v{n+1}')]=[f'v{n-1}',f'v{n+1}']
    arcs[('v0',f'v{n}')]=['v0']+[f'u{K+i}' for i in range(1,2*(n-1)+1)]+[f'v{n}']
    arcs[(f'v{n}',f'v{n+2}')]=[f'v{n}',f'v{n+2}']
    return phi,arcs

def rev(p): return p[::-1]
def w(*ps):
    out=list(ps[0])
    for p in ps[1:]:
        assert out[-1]==p[0]; out+=p[1:]
    return out
def patterns(n,M):
    P={0:{}}
    for i in range(1,n-1): P[0][i]=['v0',f'v{i}']
    P[0][n-1]=['v0',f'v{n-1}',f'v{n+1}']; P[0][n]=['v0',f'v{n}',f'v{n+2}']
    for m in range(1,M+1):
        Q=P[m-1]; pre=Q[n-1][:-1]; head=w(pre,rev(pre)); R={}
        for i in range(1,n-2):
            parts=[head]
            for j in range(0,n-2):
                q=Q[res(i+j,n)]; parts+= [q,rev(q)]
            parts.append(Q[n]); R[i]=w(*parts)
        R[n-2]=Q[n-1]
        R[n-1]=w(head,Q[n])
        parts=[head,Q[n-2],rev(Q[n-2])]
        for j in range(1,n-2): parts+=[Q[j],rev(Q[j])]
        parts.append(Q[n]); R[n]=w(*parts)
        P[m]=R
    return P

def lcp(seqs):
    k=0
    while all(len(s)>k for s in seqs) and len(set(s[k] for s in seqs))==1: k+=1
    return seqs[0][:k]
def ispal(s): return s==s[::-1]
def prio(v,n):
    return {f'v{n+1}':3,f'v{n+2}':2,f'v{n}':1}.get(v,0)
def valid_block(b,n):
    if len(b)<3 or len(b)%2==0 or not ispal(b): return False
    c=b[len(b)//2]
    if prio(c,n)==0: return False
    if b.count(c)!=1: return False
    return max(prio(x,n) for x in b)==prio(c,n)
def factor(inter,n):
    blocks=[]; s=0
    while s<len(inter)-1:
        t=s+2
        while t<len(inter) and not valid_block(inter[s:t+1],n): t+=2
        if t>=len(inter): return None
        blocks.append(inter[s:t+1]); s=t
    return blocks

def nat(s): return [int(t) if t.isdigit() else t for t in re.split(r'(\d+)',s)]
out=[]
out.append('#pragma once\n\n#include <map>\n#include <string>\n#include <vector>\n\n// Frozen from an independent scripted model of the family; do not edit by hand.\nnamespace fixtures {\n')
out.append('// vertex -> image under the family map, "x:y" pairs separated by spaces.\ninline const std::map<int, std::string> phi = {')
for n in (3,4,5):
    phi,arcs=family(n)
    s=' '.join(f'{k}:{phi[k]}' for k in sorted(phi,key=nat))
    out.append(f'    {{{n}, "{s}"}},')
out.append('};\n')
out.append('// Arcs of X1 over X0 keyed by "x-y".\ninline const std::map<int, std::map<std::string, std::string>> arcs = {')
for n in (3,4,5):
    phi,arcs=family(n)
    out.append(f'    {{{n}, {{')
    for (a,b),wk in sorted(arcs.items(),key=lambda kv:(nat(kv[0][0]),nat(kv[0][1]))):
        out.append(f'        {{"{a}-{b}", "{",".join(wk)}"}},')
    out.append('    }},')
out.append('};\n')
out.append('// Walk lengths (vertices) of the arm patterns, [n][m] -> arms 1..n, m = 0..5.')
out.append('inline const std::map<int, std::vector<std::vector<std::size_t>>> pattern_lengths = {')
for n in (3,4,5):
    P=patterns(n,5)
    rows=', '.join('{'+', '.join(str(len(P[m][i])) for i in range(1,n+1))+'}' for m in range(6))
    out.append(f'    {{{n}, {{{rows}}}}},')
out.append('};\n')
out.append('// Full patterns for n = 3, m = 2, arms 1..3, vertex indices.')
P=patterns(3,2)
out.append('inline const std::vector<std::string> patterns_n3_m2 = {')
for i in range(1,4): out.append(f'    "{",".join(x[1:] for x in P[2][i])}",')
out.append('};\n')
out.append('// Recurring prefix mined over m = 3..6, vertex indices.')
out.append('inline const std::map<int, std::string> mined_prefix = {')
for n in (3,4,5):
    P=patterns(n,6)
    allp=[P[m][i] for m in range(3,7) for i in range(1,n+1)]
    pre=lcp(allp); k=max(l for l in range(1,len(pre)+1,2) if ispal(pre[:l])); pre=pre[:k]
    out.append(f'    {{{n}, "{",".join(x[1:] for x in pre)}"}},')
out.append('};\n')
out.append('// Distinct interior blocks for n = 3 over m = 3..6, shortest first.')
P=patterns(3,6); allp=[P[m][i] for m in range(3,7) for i in range(1,4)]
pre=lcp(allp); k=max(l for l in range(1,len(pre)+1,2) if ispal(pre[:l])); pre=pre[:k]
suf=['v0','v2','v0','v1','v0','v3','v5']
cnt=set()
for p in allp:
    inter=p[len(pre)-1:len(p)-len(suf)+1]
    for x in factor(inter,3): cnt.add(tuple(x))
out.append('inline const std::vector<std::string> blocks_n3 = {')
for x in sorted(cnt,key=lambda t:(len(t),[nat(v) for v in t])): out.append(f'    "{",".join(v[1:] for v in x)}",')
out.append('};\n')
out.append('}  // namespace fixtures')
open(Path(__file__).with_name('family_fixtures.hpp'),'w').write('\n'.join(out)+'\n')
